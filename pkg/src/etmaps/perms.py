"""Permutation arithmetic and permutation-group queries.

Permutations are tuples of images on 0-indexed points: ``p[i]`` is the image
of ``i``.  Composition is left-to-right, ``compose(p, q)`` applies ``p``
first.  All I/O (cycle strings, JSON examples) uses 1-indexed points and is
converted at the boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

Perm = tuple[int, ...]


class CapExceeded(Exception):
    """A closure hit its element cap.  Signals the bound, not a failure."""

    def __init__(self, cap: int):
        super().__init__(f"group closure exceeded cap of {cap} elements")
        self.cap = cap


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def check_perm(p: Sequence[int]) -> Perm:
    if not is_perm(p):
        raise ValueError(f"not a permutation: {p!r}")
    return tuple(p)


def compose(p: Perm, q: Perm) -> Perm:
    """p then q: ``compose(p, q)[i] = q[p[i]]``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        return power(inverse(p), -k)
    result = identity(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycles(p: Perm) -> list[list[int]]:
    """Cycle decomposition including fixed points, each cycle from its least
    point, cycles ordered by least point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(cyc)
    return out


def cycle_structure(p: Perm) -> tuple[int, ...]:
    """Multiset of cycle lengths (fixed points as 1-cycles), sorted."""
    return tuple(sorted(len(c) for c in cycles(p)))


def order_of(p: Perm) -> int:
    o = 1
    for c in cycles(p):
        o = o * len(c) // gcd(o, len(c))
    return o


def sign(p: Perm) -> int:
    """+1 for even, -1 for odd; multiplicative under compose."""
    return -1 if (len(p) - len(cycles(p))) % 2 else 1


def parity(p: Perm) -> str:
    return "even" if sign(p) == 1 else "odd"


def is_involution(p: Perm) -> bool:
    return all(p[p[i]] == i for i in range(len(p)))


# -- cycle-string and JSON boundary (1-indexed externally) -------------------

def parse_cycles(s: str, degree: int) -> Perm:
    """Parse 1-indexed cycle notation like ``(1,2)(3,5)``; whitespace is
    ignored; ``()`` or an empty string is the identity."""
    s = "".join(s.split())
    images = list(range(degree))
    if s in ("", "()", "e", "id"):
        return tuple(images)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"bad cycle string: {s!r}")
    for part in s[1:-1].split(")("):
        if not part:
            continue
        pts = [int(tok) - 1 for tok in part.split(",")]
        if any(t < 0 or t >= degree for t in pts):
            raise ValueError(f"point out of range 1..{degree} in {s!r}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle {part!r}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if images[a] != a:
                raise ValueError(f"point {a + 1} in two cycles of {s!r}")
            images[a] = b
    return check_perm(images)


def format_cycles(p: Perm) -> str:
    parts = ["(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) if parts else "()"


def perm_to_json(p: Perm) -> dict:
    return {"degree": len(p), "images": list(p)}


def perm_from_json(obj) -> Perm:
    if isinstance(obj, str):
        obj = json.loads(obj)
    p = check_perm(obj["images"])
    if len(p) != obj["degree"]:
        raise ValueError("degree field does not match images length")
    return p


@dataclass(frozen=True)
class PermGroupSpec:
    """A permutation group given by generators of a common degree."""

    degree: int
    generators: tuple[Perm, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("at least one generator required")
        for g in self.generators:
            check_perm(g)
            if len(g) != self.degree:
                raise ValueError("generator degree mismatch")


def group_spec(gens: Iterable[Sequence[int]]) -> PermGroupSpec:
    gens = tuple(tuple(g) for g in gens)
    return PermGroupSpec(len(gens[0]), gens)


# -- orbits, blocks, primitivity ---------------------------------------------

def orbits(degree: int, gens: Sequence[Perm]) -> list[list[int]]:
    """Finest partition closed under all generators; parts sorted, listed by
    least element."""
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in enumerate(g):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    parts: dict[int, list[int]] = {}
    for i in range(degree):
        parts.setdefault(find(i), []).append(i)
    return [parts[r] for r in sorted(parts)]


def is_transitive(degree: int, gens: Sequence[Perm]) -> bool:
    return len(orbits(degree, gens)) == 1


def block_system(degree: int, gens: Sequence[Perm], alpha: int, beta: int) -> list[list[int]]:
    """Finest block system whose block containing ``alpha`` also contains
    ``beta`` (union-find refinement).  Requires a transitive group."""
    if not is_transitive(degree, gens):
        raise ValueError("block_system requires a transitive group")
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return None
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return rx, ry

    queue = [(alpha, beta)]
    union(alpha, beta)
    while queue:
        x, y = queue.pop()
        for g in gens:
            merged = union(g[x], g[y])
            if merged:
                queue.append(merged)
    parts: dict[int, list[int]] = {}
    for i in range(degree):
        parts.setdefault(find(i), []).append(i)
    return [parts[r] for r in sorted(parts)]


def is_primitive(degree: int, gens: Sequence[Perm]) -> bool:
    """Transitive with no nontrivial block system.  Intransitive input is an
    error."""
    if not is_transitive(degree, gens):
        raise ValueError("primitivity is only defined for transitive groups")
    if degree == 1:
        return True
    for beta in range(1, degree):
        if len(block_system(degree, gens, 0, beta)) > 1:
            return False
    return True


# -- closure / group order ----------------------------------------------------

def _packer(degree: int):
    """Dense integer keys for degrees <= 16, tuples otherwise."""
    if degree <= 16:
        def pack(p: Perm) -> int:
            key = 0
            for i in reversed(p):
                key = (key << 4) | i
            return key
        return pack
    return lambda p: p


def bfs_closure(gens: Sequence[Perm], cap: int | None = None) -> list[Perm]:
    """Elements of the generated group in deterministic BFS order: by word
    length, then generator index, then discovery order.  Raises
    :class:`CapExceeded` when the cap is hit."""
    degree = len(gens[0])
    pack = _packer(degree)
    ident = identity(degree)
    elements = [ident]
    seen = {pack(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                key = pack(y)
                if key not in seen:
                    if cap is not None and len(elements) >= cap:
                        raise CapExceeded(cap)
                    seen.add(key)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    return elements


def group_order(spec: PermGroupSpec, cap: int = 10**7) -> int:
    """Exact order of the generated group, by plain BFS closure."""
    return len(bfs_closure(spec.generators, cap=cap))


def closure_exceeds(gens: Sequence[Perm], bound: int) -> bool:
    """True iff ``|<gens>| > bound``; stops as soon as the bound is passed."""
    try:
        bfs_closure(gens, cap=bound)
    except CapExceeded:
        return True
    return False


def contains_alternating_certificate(degree: int, gens: Sequence[Perm]) -> bool:
    """True only if the generated group provably contains Alt(degree).

    Two sufficient criteria are tried on powers of short words: a primitive
    group with a single cycle of length at most degree - 3 (Jordan, with the
    classification removing the primality condition), and a transitive group
    with an element that is two cycles of coprime lengths > 1 and no fixed
    points.  False means inconclusive, not a disproof.
    """
    n = degree
    if n < 7 or not is_transitive(n, gens):
        return False
    primitive = is_primitive(n, gens)
    ident = identity(n)
    alphabet = list(dict.fromkeys(list(gens) + [inverse(g) for g in gens]))
    seen = {ident}
    words: list[Perm] = []
    frontier = [ident]
    for _ in range(8):
        nxt = []
        for w in frontier:
            for g in alphabet:
                v = compose(w, g)
                if v not in seen:
                    seen.add(v)
                    words.append(v)
                    nxt.append(v)
        frontier = nxt
        if len(words) > 800:
            break
    for w in words:
        o = order_of(w)
        for d in range(1, o):
            if o % d:
                continue
            y = power(w, d)
            nontrivial = [c for c in cycles(y) if len(c) > 1]
            if primitive and len(nontrivial) == 1 and len(nontrivial[0]) <= n - 3:
                return True
            if len(nontrivial) == 2 and len(nontrivial[0]) + len(nontrivial[1]) == n:
                a, b = len(nontrivial[0]), len(nontrivial[1])
                if gcd(a, b) == 1:
                    return True
    return False
