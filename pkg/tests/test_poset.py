import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from codeposet.composition import Composition, all_compositions, decode, dual, weight
from codeposet.errors import (
    DegreeMismatch,
    NotInsertable,
    NotRemovable,
    OutOfRange,
    ResourceCap,
)
from codeposet.permutation import all_permutations, bruhat_cover_oracle
from codeposet.poset import (
    CoverWitness,
    check_cover,
    hasse,
    hat_J,
    insertion,
    insertion_bound,
    is_insertable,
    is_removable,
    leq_A,
    lower_covers,
    removing,
    tilde_J,
    upper_covers,
)

from oracles import bruhat_hasse_edges

A = Composition((4, 5, 4, 1, 0, 2, 0), 8)
B = Composition((2, 5, 4, 1, 0, 2, 1), 8)


def C(text):
    return Composition.parse(text)


@st.composite
def codes(draw, lo=2, hi=8):
    n = draw(st.integers(lo, hi))
    parts = tuple(draw(st.integers(0, n - i)) for i in range(1, n))
    return Composition(parts, n)


def test_tilde_J_examples():
    assert tilde_J(A, 1, 2) == 7
    assert tilde_J(A, 1, 3) == 4
    assert tilde_J(C("1@2"), 1, 1) == 2


def test_removable_examples():
    assert [is_removable(A, 1, z) for z in (1, 2, 3, 4)] == [True, True, True, False]
    assert removing(A, 1, 1).parts == (3, 5, 4, 1, 0, 2, 0)
    assert removing(A, 1, 2) == B
    assert removing(A, 1, 3).parts == (1, 5, 4, 3, 0, 2, 0)
    with pytest.raises(NotRemovable):
        removing(A, 1, 4)


def test_hat_J_and_insertion_examples():
    assert [hat_J(B, 1, z) for z in (1, 2, 3, 4)] == [8, 7, 3, 2]
    assert [is_insertable(B, 1, z) for z in (1, 2, 3, 4, 5)] == [True] * 4 + [False]
    got = [insertion(B, 1, z).parts for z in (1, 2, 3, 4)]
    assert got == [
        (3, 5, 4, 1, 0, 2, 1),
        (4, 5, 4, 1, 0, 2, 0),
        (5, 5, 2, 1, 0, 2, 1),
        (6, 2, 4, 1, 0, 2, 1),
    ]
    with pytest.raises(NotInsertable):
        insertion(B, 1, 5)


def test_range_errors_are_not_false():
    with pytest.raises(OutOfRange):
        is_removable(A, 1, 5)
    with pytest.raises(OutOfRange):
        is_removable(A, 5, 1)  # alpha_5 = 0
    with pytest.raises(OutOfRange):
        is_insertable(A, 2, 2)  # row 2 has room for one box
    with pytest.raises(OutOfRange):
        tilde_J(A, 0, 1)
    with pytest.raises(OutOfRange):
        hat_J(A, 8, 1)


def test_check_cover_examples():
    assert check_cover(A, B) == CoverWitness(1, 7, 2)
    assert check_cover(A, C("4,5,3,1,0,2,0@8")) == CoverWitness(3, 8, 1)
    assert check_cover(A, A) is None
    assert check_cover(B, A) is None
    assert check_cover(C("1,0@3"), C("0,1@3")) is None  # same weight
    with pytest.raises(DegreeMismatch):
        check_cover(A, C("1@2"))


def test_lower_cover_count_of_running_example():
    covers = lower_covers(A)
    assert len(covers) == 10
    w = decode(A)
    assert all(bruhat_cover_oracle(w, decode(lo)) is not None for lo, _ in covers)


def test_leq_A():
    assert leq_A(B, A)
    assert not leq_A(A, B)
    assert leq_A(A, A)
    assert not leq_A(C("0,1@3"), C("1,0@3"))
    assert not leq_A(C("1,0@3"), C("0,1@3"))
    assert leq_A(C("0,0@3"), C("2,1@3"))
    with pytest.raises(DegreeMismatch):
        leq_A(A, C("0@2"))


@pytest.mark.parametrize("n", range(2, 6))
def test_hasse_matches_bruhat_oracle(n):
    hd = hasse(n)
    assert len(hd.nodes) == len(set(hd.nodes)) == len(list(all_permutations(n)))
    got = sorted((decode(u).values, decode(l).values, (w.i, w.j)) for u, l, w in hd.edges)
    assert got == sorted(bruhat_hasse_edges(n))
    assert all(weight(u) == weight(l) + 1 for u, l, _ in hd.edges)


def test_hasse_formats():
    hd = hasse(3)
    lines = hd.to_jsonl().splitlines()
    assert len(lines) == 8
    first = json.loads(lines[0])
    assert set(first) == {"upper", "lower", "i", "j", "z"}
    dot = hd.to_dot()
    assert dot.startswith("digraph hasse {") and dot.count("->") == 8
    assert hasse(1).to_jsonl() == ""


def test_hasse_cap_and_workers():
    with pytest.raises(ResourceCap):
        hasse(10)
    with pytest.raises(OutOfRange):
        hasse(0)
    assert hasse(4, workers=2).edges == hasse(4).edges


@pytest.mark.parametrize("n", range(2, 7))
def test_duality_and_inverse(n):
    for alpha in all_compositions(n):
        star = dual(alpha)
        for i in range(1, n):
            for z in range(1, alpha[i] + 1):
                rem = is_removable(alpha, i, z)
                assert rem == is_insertable(star, i, z)
                if rem:
                    lower = removing(alpha, i, z)
                    assert check_cover(alpha, lower) == CoverWitness(i, tilde_J(alpha, i, z), z)
                    assert insertion(lower, i, z) == alpha
            for z in range(1, n - i - alpha[i] + 1):
                assert hat_J(alpha, i, z) == tilde_J(star, i, z)
                if is_insertable(alpha, i, z):
                    assert z <= insertion_bound(alpha, i)
                    assert removing(insertion(alpha, i, z), i, z) == alpha


@pytest.mark.parametrize("n", range(2, 7))
def test_J_monotone_in_z(n):
    for alpha in all_compositions(n):
        for i in range(1, n):
            tj = [tilde_J(alpha, i, z) for z in range(1, alpha[i] + 1)]
            hj = [hat_J(alpha, i, z) for z in range(1, n - i - alpha[i] + 1)]
            assert tj == sorted(tj, reverse=True)
            assert hj == sorted(hj, reverse=True)


@pytest.mark.parametrize("n", range(2, 6))
def test_lower_and_upper_covers_agree(n):
    ups = {}
    for alpha in all_compositions(n):
        for lower, w in lower_covers(alpha):
            ups.setdefault(lower, set()).add((alpha, w))
    for alpha in all_compositions(n):
        assert set(upper_covers(alpha)) == ups.get(alpha, set())


@settings(max_examples=200, deadline=None)
@given(codes())
def test_cover_witness_properties(alpha):
    for lower, w in lower_covers(alpha):
        i, j, z = w
        assert i < j <= alpha.n
        assert lower[i] == alpha[i] - z and lower[j] == alpha[j] + z - 1
        assert check_cover(alpha, lower) == w
        assert bruhat_cover_oracle(decode(alpha), decode(lower)) is not None


@settings(max_examples=100, deadline=None)
@given(codes(hi=7), st.randoms(use_true_random=False))
def test_partwise_below_implies_leq(alpha, rng):
    lower = Composition(tuple(rng.randint(0, a) for a in alpha.parts), alpha.n)
    assert leq_A(lower, alpha)


def test_seeded_product_order_sample():
    rng = random.Random(3)
    for _ in range(50):
        n = 6
        up = tuple(rng.randint(0, n - i) for i in range(1, n))
        lo = tuple(rng.randint(0, u) for u in up)
        assert leq_A(Composition(lo, n), Composition(up, n))
