"""The Clifford model of the Schur cover and its cocycle."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tqdha.groups import validate_cocycle
from tqdha.scalars import MINUS_ONE, ONE, rational
from tqdha.spin import (
    CliffordElement,
    clifford_multiply,
    clifford_product_coefficient,
    inequality_count,
    perm_from_two_cycle,
    section_factors,
    section_u,
    section_u_inverse,
    spin_alpha,
    spin_cocycle,
    transposition_lift,
    transposition_lift_recursive,
    verify_cover,
)

N = 4


def gen(i):
    return CliffordElement.generator(N, i)


def test_clifford_products():
    e1, e2 = gen(0), gen(1)
    assert clifford_multiply(e1, e2) == CliffordElement(N, {(0, 1): ONE})
    assert clifford_multiply(e2, e1) == CliffordElement(N, {(0, 1): MINUS_ONE})
    d = e1 - e2
    assert clifford_multiply(d, d) == CliffordElement.scalar(N, 2)
    assert clifford_multiply(e1, e1) == CliffordElement.scalar(N, 1)


def test_clifford_associativity_random():
    rnd = random.Random(2)
    blades = [(), (0,), (1,), (2,), (0, 1), (1, 3), (0, 1, 2)]
    elems = [
        CliffordElement(N, {blades[rnd.randrange(len(blades))]: rational(rnd.randint(1, 3))})
        for _ in range(6)
    ]
    for x, y, z in itertools.product(elems, repeat=3):
        assert clifford_multiply(clifford_multiply(x, y), z) == clifford_multiply(
            x, clifford_multiply(y, z)
        )


def test_product_coefficient_matches_full_product():
    rnd = random.Random(4)
    for _ in range(20):
        x = CliffordElement(N, {
            tuple(sorted(rnd.sample(range(N), rnd.randint(0, 3)))): rational(rnd.randint(-2, 2) or 1)
            for _ in range(3)
        })
        y = CliffordElement(N, {
            tuple(sorted(rnd.sample(range(N), rnd.randint(0, 3)))): rational(rnd.randint(-2, 2) or 1)
            for _ in range(3)
        })
        full = clifford_multiply(x, y)
        for blade in [(), (0,), (0, 1), (1, 2, 3)]:
            assert clifford_product_coefficient(x, y, blade) == full.coeffs.get(
                blade, rational(0)
            )


def test_lift_base_and_reversal():
    t1 = transposition_lift(0, 1, N)
    sq = clifford_multiply(t1, t1)
    assert sq == CliffordElement.scalar(N, 1)
    assert transposition_lift(1, 0, N) == t1.scale(MINUS_ONE)


def test_lift_recursion_matches_closed_form():
    for n in (4, 5):
        for r in range(n):
            for s in range(n):
                if r != s:
                    assert transposition_lift_recursive(r, s, n) == transposition_lift(r, s, n)


def test_lift_rejects_equal_indices():
    with pytest.raises(ValueError):
        transposition_lift(1, 1, N)


def test_section_normal_form():
    assert section_u(tuple(range(N)), N) == CliffordElement.scalar(N, 1)
    # cycle (0 2 1): u = [0 1][0 2]
    sigma = (2, 0, 1, 3)
    assert section_factors(sigma) == [(0, 1), (0, 2)]
    # disjoint transpositions, smallest-first
    assert section_factors((1, 0, 3, 2)) == [(0, 1), (2, 3)]


def test_section_inverse():
    for sigma in itertools.permutations(range(N)):
        prod = clifford_multiply(section_u(sigma, N), section_u_inverse(sigma, N))
        assert prod == CliffordElement.scalar(N, 1)


def test_alpha_examples():
    s12 = perm_from_two_cycle(N, 0, 1)
    s34 = perm_from_two_cycle(N, 2, 3)
    ident = tuple(range(N))
    assert spin_alpha(s12, ident).is_one()
    assert spin_alpha(ident, s34).is_one()
    assert spin_alpha(s12, s12).is_one()
    assert spin_alpha(s12, s34).is_one()
    assert spin_alpha(s34, s12) == MINUS_ONE


def test_spin_cocycle_table_validates_and_is_nontrivial():
    alpha = spin_cocycle(4)
    rep = validate_cocycle(alpha)
    assert rep["normalized"] and rep["cocycle"]
    group = alpha.group
    g12 = group.perms.index(perm_from_two_cycle(4, 0, 1))
    g34 = group.perms.index(perm_from_two_cycle(4, 2, 3))
    beta = rep["commuting_pair_invariants"][(g12, g34)]
    assert beta == MINUS_ONE


def test_table_agrees_with_slow_alpha_on_sample():
    alpha = spin_cocycle(4)
    group = alpha.group
    rnd = random.Random(9)
    for _ in range(40):
        a, b = rnd.randrange(24), rnd.randrange(24)
        assert alpha(a, b) == spin_alpha(group.perms[a], group.perms[b])


def test_table_agrees_with_slow_alpha_n5_sample():
    alpha = spin_cocycle(5)
    group = alpha.group
    rnd = random.Random(21)
    for _ in range(25):
        a, b = rnd.randrange(120), rnd.randrange(120)
        assert alpha(a, b) == spin_alpha(group.perms[a], group.perms[b])
    # the nontriviality certificate persists at n = 5
    g12 = group.perms.index(perm_from_two_cycle(5, 0, 1))
    g34 = group.perms.index(perm_from_two_cycle(5, 2, 3))
    assert alpha(g12, g34) / alpha(g34, g12) == MINUS_ONE


def test_inequality_count_examples():
    assert inequality_count(0, 1, 2, 3) == 0
    assert inequality_count(2, 3, 0, 1) == 1
    with pytest.raises(ValueError):
        inequality_count(1, 1, 2, 3)


@settings(max_examples=80, deadline=None)
@given(st.permutations(list(range(6))))
def test_inequality_count_flip_property(vals):
    r, s, rp, sp = vals[:4]
    d0 = inequality_count(r, s, rp, sp)
    assert abs(d0 - inequality_count(r, s, sp, rp)) == 1
    assert abs(d0 - inequality_count(s, r, rp, sp)) == 1


def test_verify_cover_n4_exhaustive():
    res = verify_cover(4)
    assert res["all_passed"], {
        k: v["witnesses"] for k, v in res.items() if isinstance(v, dict) and not v["passed"]
    }
    # braid relation family is present and checked
    assert res["braid"]["checked"] == 2


def test_verify_cover_rejects_small_n():
    with pytest.raises(ValueError):
        verify_cover(3)
