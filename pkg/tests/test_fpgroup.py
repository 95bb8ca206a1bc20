import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypcode.errors import EnumerationOverflow
from hypcode.fpgroup import (
    RHO,
    RHO_INV,
    SIGMA,
    SIGMA_INV,
    Presentation,
    enumerate_quotient,
    free_reduce,
    inv_gen,
    invert_word,
    parse_word,
    word_power,
    word_to_str,
)

GENS = [RHO, SIGMA, RHO_INV, SIGMA_INV]
words = st.lists(st.sampled_from(GENS), min_size=0, max_size=30)


def test_inv_gen_involution():
    for g in GENS:
        assert inv_gen(inv_gen(g)) == g
        assert inv_gen(g) != g


def test_parse_basic():
    assert parse_word("R") == (RHO,)
    assert parse_word("s") == (SIGMA_INV,)
    assert parse_word("RS") == (RHO, SIGMA)
    assert parse_word("R^3") == (RHO,) * 3
    assert parse_word("R^-2") == (RHO_INV,) * 2
    assert parse_word("(Sr)^2") == (SIGMA, RHO_INV, SIGMA, RHO_INV)
    assert parse_word("(Rs)^-1") == (SIGMA, RHO_INV)


def test_parse_rejects_garbage():
    for bad in ["X", "R^", "(", "(R", "R^1.5", ")("]:
        with pytest.raises(ValueError):
            parse_word(bad)


@given(words)
def test_parse_roundtrip(w):
    if not w:
        return
    assert parse_word(word_to_str(w)) == free_reduce(tuple(w))


@given(words)
def test_free_reduce_is_idempotent(w):
    red = free_reduce(w)
    assert free_reduce(red) == red


@given(words)
def test_word_times_inverse_reduces_to_identity(w):
    assert free_reduce(tuple(w) + invert_word(tuple(w))) == ()


def test_word_power():
    assert word_power((RHO, SIGMA), 3) == (RHO, SIGMA) * 3
    assert word_power((RHO, SIGMA), -1) == (SIGMA_INV, RHO_INV)
    assert word_power((RHO,), 0) == ()


# frozen orders confirmed against an independent coset enumerator (sympy)
FROZEN_ORDERS = [
    (Presentation(3, 3, ()), 12),
    (Presentation(4, 4, ()), None),  # euclidean: infinite, must overflow
    (Presentation(5, 4, (tuple(parse_word("((Sr)^2r)^2")),)), 120),
    (Presentation(8, 3, (tuple(parse_word("(R^2s)^3")),)), 96),
]


def test_tetrahedral_order():
    assert enumerate_quotient(Presentation(3, 3, ())).order == 12


def test_catalog_quotient_orders():
    for p, order in FROZEN_ORDERS:
        if order is None:
            continue
        assert enumerate_quotient(p).order == order


def test_infinite_group_overflows():
    with pytest.raises(EnumerationOverflow):
        enumerate_quotient(Presentation(4, 4, ()), max_cosets=2000)


def test_action_is_permutation_and_relators_hold():
    p = Presentation(5, 4, (tuple(parse_word("((Sr)^2r)^2")),))
    t = enumerate_quotient(p)
    n = t.order
    for g in GENS:
        assert sorted(t.act[:, g]) == list(range(n))
    # inverse columns really invert
    for x in range(n):
        assert t.act[t.act[x, RHO], RHO_INV] == x
        assert t.act[t.act[x, SIGMA], SIGMA_INV] == x
    for rel in p.base_relators + list(p.extra_relators):
        for x in range(n):
            assert t.word_action(x, list(rel)) == x


def test_action_is_transitive_and_canonical():
    t = enumerate_quotient(Presentation(3, 3, ()))
    seen = {0}
    frontier = [0]
    order = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in GENS:
                y = int(t.act[x, g])
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    assert len(seen) == t.order
    # BFS renumbering from the identity is the numbering itself
    assert order == sorted(order)


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 6), st.integers(3, 6))
def test_sphere_like_presentations_match_formula(r, s):
    # 1/r + 1/s > 1/2 gives finite spherical triangle rotation groups
    if 2 * (r + s) <= r * s:
        return
    t = enumerate_quotient(Presentation(r, s, ()))
    import sympy.combinatorics.free_groups as fg
    from sympy.combinatorics.fp_groups import FpGroup

    F, a, b = fg.free_group("a b")
    G = FpGroup(F, [a**r, b**s, (a * b) ** 2])
    assert t.order == G.order()
