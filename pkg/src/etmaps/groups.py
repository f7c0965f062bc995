"""Finite groups as enumerated multiplication structures.

A :class:`GroupTable` is a set of element ids ``0..size-1`` with a product
oracle; id 0 is always the identity.  Concrete tables: permutation groups
enumerated by BFS closure, the metacyclic p-group families ``G_{p,e,f}`` and
their C2 extension by the automorphism ``g -> gh, h -> h^-1``, direct
products, extensions by an involutory automorphism, and quotients.

Automorphism questions are never answered by materializing Aut(G); they are
phrased as extension questions on generating tuples (:func:`hom_extension`),
which covers outer automorphisms with one algorithm.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from . import perms
from .fields import priminv_check  # noqa: F401  (group-theory surface)
from .perms import CapExceeded, Perm


class GroupTable:
    """Finite group on ids 0..size-1 with a product oracle; identity is 0."""

    size: int
    generators: list[int]

    def product(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inverse(self, a: int) -> int:
        raise NotImplementedError

    def label(self, a: int) -> str:
        return str(a)

    # -- generic helpers ------------------------------------------------------

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(a), -k)
        result = 0
        base = a
        while k:
            if k & 1:
                result = self.product(result, base)
            base = self.product(base, base)
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        o = 1
        x = a
        while x != 0:
            x = self.product(x, a)
            o += 1
        return o

    def conjugate(self, a: int, g: int) -> int:
        """g^-1 a g."""
        return self.product(self.product(self.inverse(g), a), g)

    def commutator(self, a: int, b: int) -> int:
        """a^-1 b^-1 a b."""
        return self.product(self.product(self.inverse(a), self.inverse(b)),
                            self.product(a, b))

    def subgroup(self, seed: Iterable[int], cap: int | None = None) -> list[int]:
        """Sorted element ids of the subgroup generated by ``seed``."""
        seen = {0}
        frontier = [0]
        gens = [s for s in dict.fromkeys(seed)]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.product(x, s)
                    if y not in seen:
                        if cap is not None and len(seen) >= cap:
                            raise CapExceeded(cap)
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def generates(self, seed: Iterable[int]) -> bool:
        """True iff ``seed`` generates the whole group.  A subgroup has order
        at most size/2, so the closure may stop once it passes that bound."""
        try:
            elems = self.subgroup(seed, cap=self.size // 2 + 1)
        except CapExceeded:
            return True
        return len(elems) == self.size

    def spot_check(self, samples: int = 50) -> None:
        """Associativity on sampled triples, identity and inverse laws."""
        import random
        rng = random.Random(0)
        n = self.size
        for a in range(n):
            if self.product(a, 0) != a or self.product(0, a) != a:
                raise ValueError("identity law fails")
            if self.product(a, self.inverse(a)) != 0:
                raise ValueError("inverse law fails")
        for _ in range(samples):
            a, b, c = (rng.randrange(n) for _ in range(3))
            if self.product(self.product(a, b), c) != self.product(a, self.product(b, c)):
                raise ValueError("associativity fails on a sampled triple")


class PermGroup(GroupTable):
    """A permutation group enumerated by BFS closure from its generators.

    Element ids follow the deterministic BFS order (word length, frontier
    discovery order, generator index), so downstream reports are reproducible
    byte for byte.
    """

    def __init__(self, generators: Sequence[Perm], cap: int = 10**7):
        gens = [tuple(g) for g in generators]
        self.degree = len(gens[0])
        elements = perms.bfs_closure(gens, cap=cap)
        self._pack = perms._packer(self.degree)
        self._elems = elements
        self._index = {self._pack(p): i for i, p in enumerate(elements)}
        self.size = len(elements)
        self.generators = [self._index[self._pack(g)] for g in gens]
        self._inv: list[int | None] = [None] * self.size
        self._order_cache: int | None = None

    @classmethod
    def from_spec(cls, spec: perms.PermGroupSpec, cap: int = 10**7) -> "PermGroup":
        return cls(spec.generators, cap=cap)

    def elem(self, a: int) -> Perm:
        return self._elems[a]

    def id_of(self, p: Perm) -> int:
        key = self._pack(tuple(p))
        if key not in self._index:
            raise ValueError(f"permutation {perms.format_cycles(tuple(p))} not in group")
        return self._index[key]

    def product(self, a: int, b: int) -> int:
        return self._index[self._pack(perms.compose(self._elems[a], self._elems[b]))]

    def inverse(self, a: int) -> int:
        cached = self._inv[a]
        if cached is None:
            cached = self._index[self._pack(perms.inverse(self._elems[a]))]
            self._inv[a] = cached
        return cached

    def label(self, a: int) -> str:
        return perms.format_cycles(self._elems[a])

    def generates(self, seed: Iterable[int]) -> bool:
        seed = list(seed)
        n = self.degree
        # fast certificate for large symmetric/alternating targets; when it
        # proves containment of Alt(n), an odd element settles the rest
        if n >= 7 and self.size >= 50_000 and \
                self.size in (factorial(n), factorial(n) // 2):
            elems = [self._elems[s] for s in seed]
            if perms.contains_alternating_certificate(n, elems):
                if self.size == factorial(n) // 2:
                    return True
                return any(perms.sign(p) < 0 for p in elems)
        return super().generates(seed)


class GpefGroup(GroupTable):
    """G_{p,e,f} = <g, h | g^n = h^n = 1, h^g = h^(p^f+1)> with n = p^e.

    Elements in normal form g^i h^j, encoded as id = i*n + j; the product is
    g^i h^j . g^k h^l = g^(i+k) h^(r^k j + l) with r = p^f + 1.
    """

    def __init__(self, p: int, e: int, f: int):
        if e < 1 or f < 1 or f > e:
            raise ValueError("need 1 <= f <= e")
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("p must be prime")
        self.p, self.e, self.f = p, e, f
        self.n = p ** e
        self.r = p ** f + 1
        self.size = self.n * self.n
        self.generators = [self._id(1, 0), self._id(0, 1)]  # g, h

    def _id(self, i: int, j: int) -> int:
        return (i % self.n) * self.n + (j % self.n)

    def coords(self, a: int) -> tuple[int, int]:
        return divmod(a, self.n)

    def product(self, a: int, b: int) -> int:
        i, j = divmod(a, self.n)
        k, l = divmod(b, self.n)
        return self._id(i + k, pow(self.r, k, self.n) * j + l)

    def inverse(self, a: int) -> int:
        i, j = divmod(a, self.n)
        k = (-i) % self.n
        l = (-pow(self.r, k, self.n) * j) % self.n
        return self._id(k, l)

    def label(self, a: int) -> str:
        i, j = divmod(a, self.n)
        return f"g^{i} h^{j}"


class GpefAlphaGroup(GroupTable):
    """The order 2^(2e+1) extension A = G_{2,e,2} x| <alpha> with
    g^alpha = gh, h^alpha = h^-1 and alpha^2 = 1.

    Elements g^i h^j alpha^eps with i, j mod 2^e; id = (i*2^e + j)*2 + eps.
    """

    def __init__(self, e: int):
        if e < 3:
            raise ValueError("need e >= 3")
        self.e = e
        self.n = 2 ** e
        self.size = 2 * self.n * self.n
        self.generators = [self._id(1, 0, 0), self._id(0, 1, 0), self._id(0, 0, 1)]

    def _id(self, i: int, j: int, eps: int) -> int:
        return ((i % self.n) * self.n + (j % self.n)) * 2 + (eps % 2)

    def coords(self, a: int) -> tuple[int, int, int]:
        ij, eps = divmod(a, 2)
        i, j = divmod(ij, self.n)
        return i, j, eps

    def _alpha_img(self, i: int, j: int) -> tuple[int, int]:
        # (g^i h^j)^alpha = (gh)^i h^-j = g^i h^(sigma(i) - j), sigma(i) = 1+5+...+5^(i-1)
        sigma = (pow(5, i, 4 * self.n) - 1) // 4 % self.n
        return i, (sigma - j) % self.n

    def product(self, a: int, b: int) -> int:
        i, j, eps = self.coords(a)
        k, l, delta = self.coords(b)
        if eps:
            k2, l2 = self._alpha_img(k, l)
        else:
            k2, l2 = k, l
        return self._id(i + k2, pow(5, k2, self.n) * j + l2, eps + delta)

    def inverse(self, a: int) -> int:
        i, j, eps = self.coords(a)
        if not eps:
            k = (-i) % self.n
            return self._id(k, -pow(5, k, self.n) * j, 0)
        # (x alpha)^-1 = alpha x^-1 = (x^-1)^alpha alpha
        k = (-i) % self.n
        l = (-pow(5, k, self.n) * j) % self.n
        k2, l2 = self._alpha_img(k, l)
        return self._id(k2, l2, 1)

    def label(self, a: int) -> str:
        i, j, eps = self.coords(a)
        return f"g^{i} h^{j}" + (" a" if eps else "")


class DirectProduct(GroupTable):
    """A x B; id = a*|B| + b.  Generators: the given pairs, else the obvious
    embedded generators of both factors."""

    def __init__(self, left: GroupTable, right: GroupTable,
                 generator_pairs: Sequence[tuple[int, int]] | None = None):
        self.left, self.right = left, right
        self.size = left.size * right.size
        if generator_pairs is None:
            generator_pairs = [(g, 0) for g in left.generators] + \
                              [(0, g) for g in right.generators]
        self.generators = [a * right.size + b for a, b in generator_pairs]

    def product(self, a: int, b: int) -> int:
        a1, a2 = divmod(a, self.right.size)
        b1, b2 = divmod(b, self.right.size)
        return self.left.product(a1, b1) * self.right.size + self.right.product(a2, b2)

    def inverse(self, a: int) -> int:
        a1, a2 = divmod(a, self.right.size)
        return self.left.inverse(a1) * self.right.size + self.right.inverse(a2)

    def label(self, a: int) -> str:
        a1, a2 = divmod(a, self.right.size)
        return f"({self.left.label(a1)}, {self.right.label(a2)})"


class InvolutoryExtension(GroupTable):
    """G x| <t> with t^2 = 1 acting on G by a given involutory automorphism.

    Elements (x, eps) with id = x*2 + eps and (x,1)(y,d) = (x a(y), 1+d).
    """

    def __init__(self, base: GroupTable, alpha: Sequence[int]):
        if len(alpha) != base.size:
            raise ValueError("alpha must be a map on all element ids")
        self.base = base
        self.alpha = list(alpha)
        for x in range(base.size):
            if self.alpha[self.alpha[x]] != x:
                raise ValueError("alpha is not involutory")
        self.size = 2 * base.size
        self.generators = [g * 2 for g in base.generators] + [1]  # (e,1) has id 1

    def product(self, a: int, b: int) -> int:
        x, eps = divmod(a, 2)
        y, delta = divmod(b, 2)
        y2 = self.alpha[y] if eps else y
        return self.base.product(x, y2) * 2 + ((eps + delta) % 2)

    def inverse(self, a: int) -> int:
        x, eps = divmod(a, 2)
        xi = self.base.inverse(x)
        return (self.alpha[xi] if eps else xi) * 2 + eps

    def label(self, a: int) -> str:
        x, eps = divmod(a, 2)
        return self.base.label(x) + (" t" if eps else "")


class QuotientGroup(GroupTable):
    """G/N for a verified-normal subgroup N; cosets in order of least member,
    so the identity coset is id 0."""

    def __init__(self, parent: GroupTable, members: Sequence[int], check: bool = True):
        mem = sorted(set(members))
        if check:
            _check_subgroup(parent, mem)
            _check_normal(parent, mem)
        self.parent = parent
        coset_of = [-1] * parent.size
        reps: list[int] = []
        for x in range(parent.size):
            if coset_of[x] != -1:
                continue
            cid = len(reps)
            reps.append(x)
            for m in mem:
                coset_of[parent.product(m, x)] = cid
        self.coset_of = coset_of
        self.reps = reps
        self.size = len(reps)
        self.generators = sorted({coset_of[g] for g in parent.generators}) or [0]

    def product(self, a: int, b: int) -> int:
        return self.coset_of[self.parent.product(self.reps[a], self.reps[b])]

    def inverse(self, a: int) -> int:
        return self.coset_of[self.parent.inverse(self.reps[a])]

    def label(self, a: int) -> str:
        return self.parent.label(self.reps[a]) + " N"


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of a :class:`GroupTable`, with a generating seed kept so the
    derived series can continue without scanning all member pairs."""

    parent: GroupTable
    members: tuple[int, ...]
    gens: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)


def _check_subgroup(G: GroupTable, members: Sequence[int]) -> None:
    mset = set(members)
    if 0 not in mset:
        raise ValueError("subgroup must contain the identity")
    for a in members:
        if G.inverse(a) not in mset:
            raise ValueError("subgroup not closed under inverse")
        for b in members:
            if G.product(a, b) not in mset:
                raise ValueError("subgroup not closed under product")


def _check_normal(G: GroupTable, members: Sequence[int]) -> None:
    mset = set(members)
    for g in G.generators:
        for m in members:
            if G.conjugate(m, g) not in mset:
                raise ValueError("subgroup is not normal")


def center(G: GroupTable) -> list[int]:
    gens = G.generators
    return [x for x in range(G.size)
            if all(G.product(x, g) == G.product(g, x) for g in gens)]


def normal_closure(G: GroupTable, seed: Iterable[int],
                   conjugators: Sequence[int] | None = None) -> SubgroupSet:
    """Smallest subgroup containing ``seed`` and closed under conjugation by
    ``conjugators`` (default: the group generators)."""
    if conjugators is None:
        conjugators = G.generators
    conj = list(conjugators) + [G.inverse(c) for c in conjugators]
    gens = [s for s in dict.fromkeys(seed) if s != 0]
    members = set(G.subgroup(gens))
    changed = True
    while changed:
        changed = False
        for h in list(gens):
            for c in conj:
                x = G.conjugate(h, c)
                if x not in members:
                    gens.append(x)
                    members = set(G.subgroup(gens))
                    changed = True
    return SubgroupSet(G, tuple(sorted(members)), tuple(gens))


def derived_subgroup(G: GroupTable) -> SubgroupSet:
    """Normal closure of the commutators of the generators."""
    seed = [G.commutator(a, b) for a in G.generators for b in G.generators]
    return normal_closure(G, seed)


def derived_series(G: GroupTable) -> list[SubgroupSet]:
    """G >= G' >= G'' >= ... until the series stabilizes."""
    whole = SubgroupSet(G, tuple(range(G.size)), tuple(G.generators))
    series = [whole]
    current = whole
    while True:
        seed = [G.commutator(a, b) for a in current.gens for b in current.gens]
        nxt = normal_closure(G, seed, conjugators=current.gens)
        if len(nxt.members) == len(current.members):
            return series
        series.append(nxt)
        current = nxt
        if len(current.members) == 1:
            return series


def derived_length(G: GroupTable) -> int | None:
    """Length of the derived series, or None if G is not solvable."""
    series = derived_series(G)
    if series[-1].order != 1:
        return None
    return len(series) - 1


def quotient(G: GroupTable, members: Sequence[int]) -> QuotientGroup:
    return QuotientGroup(G, members)


def nilpotence_class(G: GroupTable) -> int | None:
    """Length of the upper central series, or None if G is not nilpotent."""
    Q: GroupTable = G
    c = 0
    while Q.size > 1:
        Z = center(Q)
        if len(Z) == 1:
            return None
        Q = QuotientGroup(Q, Z, check=False)
        c += 1
    return c


def conjugacy_classes(G: GroupTable) -> list[list[int]]:
    conj = list(G.generators) + [G.inverse(g) for g in G.generators]
    seen = [False] * G.size
    classes = []
    for x in range(G.size):
        if seen[x]:
            continue
        orbit = [x]
        seen[x] = True
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for c in conj:
                    z = G.conjugate(y, c)
                    if not seen[z]:
                        seen[z] = True
                        orbit.append(z)
                        nxt.append(z)
            frontier = nxt
        classes.append(sorted(orbit))
    return classes


def involutions(G: GroupTable) -> list[int]:
    return [x for x in range(1, G.size) if G.product(x, x) == 0]


def strongly_real(G: GroupTable, x: int) -> bool:
    """x is the identity, an involution, or a product of two involutions,
    i.e. inverted by some involution."""
    if x == 0 or G.product(x, x) == 0:
        return True
    xinv = G.inverse(x)
    return any(G.conjugate(x, t) == xinv for t in involutions(G))


# -- automorphism-extension machinery -----------------------------------------

def hom_extension(G: GroupTable, src: Sequence[int], dst: Sequence[int]) -> list[int] | None:
    """The automorphism of G extending src_i -> dst_i, as an image array, or
    None if the assignment does not extend.

    BFS over the Cayley graph on ``src``; every closing edge is checked for
    consistency, and the image set must be all of G.  ``src`` must generate.
    """
    if len(src) != len(dst):
        raise ValueError("src and dst must have equal length")
    images = [-1] * G.size
    images[0] = 0
    frontier = [0]
    assigned = 1
    while frontier:
        nxt = []
        for x in frontier:
            ix = images[x]
            for s, d in zip(src, dst):
                y = G.product(x, s)
                iy = G.product(ix, d)
                if images[y] == -1:
                    images[y] = iy
                    assigned += 1
                    nxt.append(y)
                elif images[y] != iy:
                    return None
        frontier = nxt
    if assigned != G.size:
        raise ValueError("src does not generate the group")
    if len(set(images)) != G.size:
        return None
    return images


def hom_extension_exists(G: GroupTable, src: Sequence[int], dst: Sequence[int]) -> bool:
    return hom_extension(G, src, dst) is not None


@dataclass
class SurveyReport:
    group_order: int
    total_pairs: int
    generating_pairs: int
    inverted_generating_pairs: int
    counterexample: tuple[int, int] | None

    @property
    def all_inverted(self) -> bool:
        return self.counterexample is None


def _aut_action_arrays(G: PermGroup, aut_gens: Sequence[Perm],
                       cap: int = 200000) -> list[list[int]]:
    """Element-id permutations induced by conjugation by each member of the
    group generated by ``aut_gens`` inside Sym(degree)."""
    auts = perms.bfs_closure([tuple(a) for a in aut_gens], cap=cap)
    arrays = []
    for n in auts:
        ninv = perms.inverse(n)
        try:
            arr = [G.id_of(perms.compose(perms.compose(ninv, G.elem(x)), n))
                   for x in range(G.size)]
        except ValueError as exc:
            raise ValueError("aut_action does not normalize the group") from exc
        arrays.append(arr)
    return arrays


def simultaneous_inversion_survey(G: GroupTable,
                                  aut_gens: Sequence[Perm] | None = None) -> SurveyReport:
    """For every ordered generating pair (x, y) of G, decide whether some
    automorphism inverts both; report counts and the first counterexample.

    Without ``aut_gens`` each generating pair is tested with
    :func:`hom_extension_exists` (covers outer automorphisms).  With
    ``aut_gens`` (permutations normalizing a :class:`PermGroup` G and inducing
    all of Aut G, e.g. PGammaL(2,q) over PSL(2,q)), inversion is decided by
    intersecting precomputed inverting sets, and generation is computed on
    orbit representatives and transported along the action; the counts are
    exact either way.
    """
    n = G.size
    if aut_gens is None:
        # generation and invertibility are invariant under simultaneous
        # conjugation, so scan one representative per conjugacy class in the
        # first slot and weight by the class size; the counts stay exact
        generating = 0
        inverted = 0
        counterexample = None
        for cls in conjugacy_classes(G):
            x = cls[0]
            xi = G.inverse(x)
            weight = len(cls)
            for y in range(n):
                if not G.generates((x, y)):
                    continue
                generating += weight
                if hom_extension_exists(G, (x, y), (xi, G.inverse(y))):
                    inverted += weight
                elif counterexample is None:
                    counterexample = (x, y)
        return SurveyReport(n, n * n, generating, inverted, counterexample)

    assert isinstance(G, PermGroup), "aut_gens requires a permutation group"
    acts = _aut_action_arrays(G, aut_gens)
    idx_of = {}
    for i, arr in enumerate(acts):
        idx_of[tuple(arr)] = i
    inv_of_act = []
    for arr in acts:
        inv_arr = [0] * n
        for a, b in enumerate(arr):
            inv_arr[b] = a
        inv_of_act.append(idx_of[tuple(inv_arr)])

    masks = [0] * n
    for x in range(n):
        xi = G.inverse(x)
        m = 0
        for i, arr in enumerate(acts):
            if arr[x] == xi:
                m |= 1 << i
        masks[x] = m

    rep_of = [-1] * n
    via = [0] * n  # index of an action taking the orbit rep to x
    reps = []
    ident_idx = idx_of[tuple(range(n))]
    for x in range(n):
        if rep_of[x] != -1:
            continue
        reps.append(x)
        rep_of[x] = x
        via[x] = ident_idx
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for i, arr in enumerate(acts):
                    z = arr[y]
                    if rep_of[z] == -1:
                        rep_of[z] = x
                        # rep -> y (via[y]) followed by y -> z (action i)
                        via[z] = idx_of[tuple(arr[k] for k in acts[via[y]])]
                        nxt.append(z)
            frontier = nxt

    gen_rows: dict[int, list[bool]] = {}
    for r in reps:
        gen_rows[r] = [G.generates((r, y)) for y in range(n)]

    generating = 0
    inverted = 0
    counterexample = None
    for x in range(n):
        r = rep_of[x]
        back = inv_of_act[via[x]]
        row = gen_rows[r]
        act_back = acts[back]
        mx = masks[x]
        for y in range(n):
            if not row[act_back[y]]:
                continue
            generating += 1
            if mx & masks[y]:
                inverted += 1
            elif counterexample is None:
                counterexample = (x, y)
    return SurveyReport(n, n * n, generating, inverted, counterexample)


# -- triple counting: brute force and the character formula -------------------

def count_triples_brute(G: GroupTable, A: Iterable[int], B: Iterable[int],
                        C: Iterable[int]) -> int:
    """Number of pairs (a, b) in A x B with (ab)^-1 in C, i.e. solutions of
    abc = 1 with c restricted to C."""
    Cset = set(C)
    count = 0
    for a in A:
        for b in B:
            if G.inverse(G.product(a, b)) in Cset:
                count += 1
    return count


class BadCharacterTable(Exception):
    pass


@dataclass
class CharacterTable:
    order: int
    class_sizes: list[int]
    class_labels: list[str]
    class_reps: list[str]  # cycle strings locating each class, may be empty
    chars: list[list[complex]]

    def validate(self, tol: float = 1e-8) -> None:
        if sum(self.class_sizes) != self.order:
            raise BadCharacterTable("class sizes do not sum to the group order")
        for row in self.chars:
            if not (row[0].real > 0 and abs(row[0].imag) < tol):
                raise BadCharacterTable("a character degree is not positive")
        k = len(self.class_sizes)
        for i, ri in enumerate(self.chars):
            for j, rj in enumerate(self.chars):
                s = sum(self.class_sizes[t] * ri[t] * rj[t].conjugate()
                        for t in range(k))
                want = self.order if i == j else 0
                if abs(s - want) > tol * self.order:
                    raise BadCharacterTable("row orthogonality fails")

    @classmethod
    def from_json(cls, obj) -> "CharacterTable":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            order=obj["order"],
            class_sizes=[c["size"] for c in obj["classes"]],
            class_labels=[c["label"] for c in obj["classes"]],
            class_reps=[c.get("rep", "") for c in obj["classes"]],
            chars=[[complex(re, im) for re, im in row] for row in obj["chars"]],
        )


def frobenius_count(ct: CharacterTable, a_class: int, b_class: int,
                    c_class: int, tol: float = 1e-6) -> int:
    """|A||B||C|/|G| * sum over irreducible characters of
    chi(a)chi(b)chi(c)/chi(1); must come out a nonnegative integer."""
    total = 0j
    for row in ct.chars:
        total += row[a_class] * row[b_class] * row[c_class] / row[0]
    sizes = ct.class_sizes
    value = total * sizes[a_class] * sizes[b_class] * sizes[c_class] / ct.order
    if abs(value.imag) > tol or abs(value.real - round(value.real)) > tol:
        raise BadCharacterTable(
            f"formula value {value} is not an integer: corrupted table")
    return round(value.real)


# -- index-2 subgroups (even-realization machinery) ---------------------------

def index2_characters(G: GroupTable) -> list[list[int]]:
    """All homomorphisms G -> C2 as 0/1 arrays over element ids, the trivial
    one excluded.  Kernels are exactly the index-2 subgroups."""
    der = derived_subgroup(G)
    seed = list(der.gens) + [G.product(g, g) for g in G.generators]
    K = normal_closure(G, seed)
    Q = QuotientGroup(G, K.members, check=False)
    if Q.size == 1:
        return []
    # Q is elementary abelian of exponent 2; find a basis greedily.
    basis: list[int] = []
    span = {0}
    for q in range(1, Q.size):
        if q in span:
            continue
        basis.append(q)
        span = set(Q.subgroup(basis))
        if len(span) == Q.size:
            break
    out = []
    for vec in range(1, 1 << len(basis)):
        lam_q = [-1] * Q.size
        lam_q[0] = 0
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for i, b in enumerate(basis):
                    y = Q.product(x, b)
                    v = lam_q[x] ^ ((vec >> i) & 1)
                    if lam_q[y] == -1:
                        lam_q[y] = v
                        nxt.append(y)
            frontier = nxt
        out.append([lam_q[Q.coset_of[x]] for x in range(G.size)])
    return out


# -- JSON loading --------------------------------------------------------------

def group_from_json(obj, cap: int = 10**7) -> GroupTable:
    """{"family":"gpef","p":..,"e":..,"f":..}, {"family":"gpef_alpha","e":..},
    or {"degree":n,"generators":[cycles-or-image-lists]}."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    fam = obj.get("family")
    if fam == "gpef":
        return GpefGroup(obj["p"], obj["e"], obj["f"])
    if fam == "gpef_alpha":
        return GpefAlphaGroup(obj["e"])
    if fam is not None:
        raise ValueError(f"unknown group family {fam!r}")
    degree = obj["degree"]
    gens = []
    for g in obj["generators"]:
        if isinstance(g, str):
            gens.append(perms.parse_cycles(g, degree))
        else:
            gens.append(perms.check_perm(g))
    return PermGroup(gens, cap=cap)
