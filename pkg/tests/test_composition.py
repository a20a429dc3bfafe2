import json
import random

import pytest

from codeposet.composition import (
    Composition,
    all_compositions,
    c_entry,
    c_matrix,
    c_row,
    capital_N,
    decode,
    dual,
    k_alpha,
    validate,
    weight,
)
from codeposet.errors import NoDescent, OutOfRange, ParseError, StaircaseViolation
from codeposet.permutation import Permutation, all_permutations, encode, extended_code_count

from oracles import lehmer

A = Composition((4, 5, 4, 1, 0, 2, 0), 8)
B = Composition((2, 5, 4, 1, 0, 2, 1), 8)

# c-matrix of A, columns 1..9
PRINTED = [
    [0, 0, 0, 0, 1, 2, 2, 3, 4],
    [0, 0, 0, 1, 2, 3, 3, 4, 5],
    [0, 0, 0, 0, 1, 2, 2, 3, 4],
    [0, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
]


def C(text):
    return Composition.parse(text)


def test_validate():
    assert validate((4, 5, 4, 1, 0, 2, 0), 8) == A
    assert validate((), 1).parts == ()
    assert validate((1,), 4).parts == (1, 0, 0)
    with pytest.raises(StaircaseViolation) as info:
        validate((8,), 8)
    assert info.value.index == 1
    with pytest.raises(StaircaseViolation) as info:
        validate((0, 0, 2), 4)
    assert info.value.index == 3
    with pytest.raises(StaircaseViolation):
        validate((0, 0, 0, 1), 4)


def test_text_and_json_formats():
    assert str(A) == "4,5,4,1,0,2,0@8"
    assert C("4,5,4,1,0,2,0@8") == A
    assert C("4,5,4,1,0,2,0") == A
    assert C("@1") == Composition((), 1)
    assert Composition.from_json(json.dumps(A.to_json())) == A
    assert A.to_json() == {"n": 8, "parts": [4, 5, 4, 1, 0, 2, 0]}
    with pytest.raises(ParseError):
        C("1,x@3")


def test_indexing_reads_zero_past_end():
    assert A[1] == 4 and A[7] == 0 and A[8] == 0 and A[20] == 0
    with pytest.raises(OutOfRange):
        A[0]


def test_weight():
    assert weight(A) == 16
    assert weight(Composition((0, 0, 0), 4)) == 0
    assert weight(B) == 15


def test_capital_N():
    assert capital_N(A) == 8
    assert capital_N(Composition((1,), 2)) == 2
    assert capital_N(Composition((0, 0, 0), 4)) == 1


def test_c_entry_examples():
    assert [c_entry(A, 1, j) for j in range(1, 10)] == PRINTED[0]
    assert c_entry(A, 2, 9) == 5
    for alpha in (A, B):
        for i in range(1, 8):
            assert c_entry(alpha, i, i + 1) == 0
    assert c_entry(A, 1, 50) == c_entry(A, 1, 9)
    with pytest.raises(OutOfRange):
        c_entry(A, 8, 3)
    with pytest.raises(OutOfRange):
        c_entry(A, 1, 0)


def test_c_matrix_examples():
    assert c_matrix(A) == PRINTED
    assert c_matrix(Composition((0, 0, 0), 4)) == [[0] * 5] * 3
    assert c_matrix(Composition((1,), 2)) == [[0, 0, 1]]
    assert c_matrix(Composition((), 1)) == []


def test_decode_examples():
    assert decode(A) == Permutation.parse("5,7,6,2,1,8,3,4")
    assert decode(Composition((0, 0, 0), 4)) == Permutation.parse("1,2,3,4")
    assert decode(B) == Permutation.parse("3,7,6,2,1,8,5,4")


@pytest.mark.parametrize("n", range(1, 7))
def test_decode_inverts_encode(n):
    codes = list(all_compositions(n))
    assert len(codes) == len(set(codes)) == len(list(all_permutations(n)))
    for alpha in codes:
        w = decode(alpha)
        assert lehmer(w.values) == alpha.parts
        assert encode(w) == alpha


def test_dual():
    # 8 - 7 - 0 = 1 in the last slot
    assert dual(A).parts == (3, 1, 1, 3, 3, 0, 1)
    assert dual(Composition((0, 0, 0), 4)).parts == (3, 2, 1)
    assert dual(dual(A)) == A
    assert dual(B).parts == (5, 1, 1, 3, 3, 0, 0)


def test_k_alpha():
    assert k_alpha(A, 1) == 4
    assert k_alpha(Composition((1,), 2), 1) == 2
    assert k_alpha(dual(B), 1) == 2
    with pytest.raises(NoDescent):
        k_alpha(A, 5)


@pytest.mark.parametrize("n", range(2, 7))
def test_bounds_and_stabilisation(n):
    for alpha in all_compositions(n):
        N = capital_N(alpha)
        for i in range(1, n):
            row = c_row(alpha, i)
            ai = alpha[i]
            assert all(row[j - 1] <= row[j] <= ai for j in range(1, n + 1))
            for j in range(1, n + 2):
                lo = max(0, min(ai, ai + j - N - 1))
                hi = min(ai, max(j - i - 1, 0))
                assert lo <= row[j - 1] <= hi
            assert row[N] == ai  # column N + 1
        if weight(alpha):
            assert any(c_entry(alpha, i, N) < alpha[i] for i in range(1, n))


@pytest.mark.parametrize("n", range(2, 7))
def test_c_entry_matches_permutation_count(n):
    for w in all_permutations(n):
        alpha = encode(w)
        for i in range(1, n):
            for j in range(i + 1, n + 2):
                assert c_entry(alpha, i, j) == extended_code_count(w, i, j)


@pytest.mark.parametrize("n", range(2, 7))
def test_dual_complements_c(n):
    for alpha in all_compositions(n):
        star = dual(alpha)
        for i in range(1, n):
            for j in range(i + 1, n + 2):
                assert c_entry(star, i, j) == j - i - 1 - c_entry(alpha, i, j)


def test_c_row_drops_under_partwise_perturbation():
    rng = random.Random(7)
    checked = 0
    for _ in range(3000):
        n = rng.randint(3, 9)
        alpha = Composition(tuple(rng.randint(0, n - i) for i in range(1, n)), n)
        i = rng.randint(1, n - 1)
        l = rng.randint(i + 1, n)
        parts = list(alpha.parts)
        parts[i - 1] = rng.randint(0, alpha[i])
        for k in range(i + 1, min(l, n - 1) + 1):
            parts[k - 1] = rng.randint(alpha[k], n - k)
        tilde = Composition(tuple(parts), n)
        for k in range(i + 1, l + 2):
            assert c_entry(tilde, i, k) <= c_entry(alpha, i, k)
        checked += 1
    assert checked == 3000
