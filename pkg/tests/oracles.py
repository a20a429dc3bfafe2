"""Brute-force references that share no code with the package."""

from itertools import combinations, permutations


def inversions(v):
    return sum(1 for a, b in combinations(range(len(v)), 2) if v[a] > v[b])


def swap(v, i, j):
    # 1-based positions
    v = list(v)
    v[i - 1], v[j - 1] = v[j - 1], v[i - 1]
    return tuple(v)


def lehmer(v):
    n = len(v)
    return tuple(sum(1 for k in range(i + 1, n) if v[k] < v[i]) for i in range(n - 1))


def lower_covers_by_length(v):
    """``{(w * (i,j), (i,j))}`` with one inversion fewer: every Bruhat lower cover."""
    ell = inversions(v)
    return {
        (swap(v, i, j), (i, j))
        for i, j in combinations(range(1, len(v) + 1), 2)
        if inversions(swap(v, i, j)) == ell - 1
    }


def bruhat_hasse_edges(n):
    return {
        (v, lower, t)
        for v in permutations(range(1, n + 1))
        for lower, t in lower_covers_by_length(v)
    }
