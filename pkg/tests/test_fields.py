import pytest

from etmaps import perms
from etmaps.fields import (FiniteField, PSL2Element, pgammal2_generators,
                           priminv_check, psl2_group_generators, psl2_order)


def test_small_field_axioms():
    for p, e in ((2, 1), (3, 1), (2, 3), (3, 2), (5, 1)):
        F = FiniteField(p, e)
        q = F.q
        for a in range(q):
            assert F.add(a, 0) == a
            assert F.mul(a, 1) == a
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
        for a in range(q):
            for b in range(q):
                assert F.add(a, b) == F.add(b, a)
                assert F.mul(a, b) == F.mul(b, a)
        # distributivity on a few triples
        for a, b, c in ((1, 2 % q, 3 % q), (q - 1, 1, 1)):
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_first_irreducible_pinned():
    assert FiniteField(2, 2).modulus == (1, 1, 1)        # x^2 + x + 1
    assert FiniteField(2, 3).modulus == (1, 1, 0, 1)     # x^3 + x + 1
    assert FiniteField(3, 2).modulus == (1, 0, 1)        # x^2 + 1


def test_primitive_root_order():
    for p, e in ((2, 3), (3, 2), (7, 1), (2, 4)):
        F = FiniteField(p, e)
        assert F.mult_order(F.primitive_root()) == F.q - 1


def test_priminv_boundary():
    assert priminv_check(2, 1)
    assert priminv_check(3, 1)
    assert priminv_check(2, 2)
    assert not priminv_check(5, 1)
    assert not priminv_check(3, 2)   # q = 9: derived by enumeration
    assert not priminv_check(2, 3)


def test_psl2_element_identified_with_negative():
    F = FiniteField(7)
    a = PSL2Element(F, 1, 3, 4, 6)
    b = PSL2Element(F, 6, 4, 3, 1)
    assert a == b
    with pytest.raises(ValueError):
        PSL2Element(F, 1, 1, 1, 1)   # det 0


def test_psl2_orders_by_closure():
    for q in (5, 7, 8, 9, 11):
        F = next(FiniteField(p, e) for p in (2, 3, 5, 7, 11)
                 for e in (1, 2, 3) if p ** e == q)
        gens = psl2_group_generators(F)
        assert perms.group_order(perms.group_spec(gens)) == psl2_order(q)


def test_psl2_two_transitive_on_projective_line():
    F = FiniteField(11)
    gens = psl2_group_generators(F)
    assert perms.is_transitive(12, gens)
    assert perms.is_primitive(12, gens)
    # 2-transitivity: the stabilizer of infinity (index q+1) acts
    # transitively on the rest; check orbit of (infinity, 0) pairs instead
    pairs = {(0, 1)}
    frontier = [(0, 1)]
    while frontier:
        x, y = frontier.pop()
        for g in gens:
            nxt = (g[x], g[y])
            if nxt not in pairs:
                pairs.add(nxt)
                frontier.append(nxt)
    assert len(pairs) == 12 * 11


def test_pgammal_order():
    F = FiniteField(3, 2)
    gens = pgammal2_generators(F)
    # PGammaL(2,9) = Aut(PSL(2,9)) has order 1440
    assert perms.group_order(perms.group_spec(gens)) == 1440
