"""
Permutations of ``[n] = {1, ..., n}`` in one-line notation.

Everything here is 1-based to match the usual combinatorial conventions:
``w[1]`` is the first letter of ``w``, and a transposition ``(i, j)`` acts on
the right by swapping the *values at positions* ``i`` and ``j``.

The cover test in this module is the classical one (a transposition with no
intermediate value in between) and serves as ground truth for the intrinsic
cover relation on codes.

>>> w = Permutation.parse("5,7,6,2,1,8,3,4")
>>> length(w)
16
>>> str(encode(w))
'4,5,4,1,0,2,0@8'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Optional

from .errors import DegreeMismatch, OutOfRange, ParseError

if TYPE_CHECKING:
    from .composition import Composition


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise ParseError("a permutation needs degree n >= 1")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ParseError(
                f"{values} is not a rearrangement of 1..{len(values)}"
            )
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """The value ``w(i)`` at 1-based position ``i``."""
        if not 1 <= i <= self.n:
            raise OutOfRange(f"position {i} outside [1, {self.n}]")
        return self.values[i - 1]

    def __str__(self):
        return ",".join(map(str, self.values))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        try:
            values = tuple(int(tok) for tok in text.strip().split(","))
        except ValueError:
            raise ParseError(f"cannot read a permutation from {text!r}") from None
        return cls(values)

    def embed(self, n: int) -> "Permutation":
        """The image of ``self`` under ``S_m -> S_n`` fixing ``m+1..n``."""
        if n < self.n:
            raise DegreeMismatch(f"cannot embed S_{self.n} into S_{n}")
        return Permutation(self.values + tuple(range(self.n + 1, n + 1)))


@dataclass(frozen=True)
class Transposition:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise OutOfRange(f"transposition needs 1 <= i < j, got ({self.i},{self.j})")

    def __iter__(self):
        return iter((self.i, self.j))

    def __str__(self):
        return f"({self.i},{self.j})"


def identity(n: int) -> Permutation:
    if n < 1:
        raise OutOfRange("degree must be at least 1")
    return Permutation(tuple(range(1, n + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def length(w: Permutation) -> int:
    """Number of inversions ``i < j`` with ``w(i) > w(j)``."""
    v = w.values
    return sum(1 for a, b in itertools.combinations(range(w.n), 2) if v[a] > v[b])


def multiply_right_transposition(w: Permutation, t: Transposition) -> Permutation:
    i, j = t
    if j > w.n:
        raise OutOfRange(f"transposition {t} outside S_{w.n}")
    values = list(w.values)
    values[i - 1], values[j - 1] = values[j - 1], values[i - 1]
    return Permutation(tuple(values))


def _no_intermediate(v: tuple[int, ...], i: int, j: int) -> bool:
    # 1-based i < j with v(i) < v(j); checks nothing strictly between in value
    lo, hi = v[i - 1], v[j - 1]
    return all(not lo < v[k - 1] < hi for k in range(i + 1, j))


def bruhat_cover_oracle(w: Permutation, w_prime: Permutation) -> Optional[Transposition]:
    """
    Return ``(i, j)`` when ``w`` covers ``w_prime`` with ``w = w_prime * (i, j)``.

    The test: ``w_prime(i) < w_prime(j)`` and no ``k`` strictly between the
    positions carries a value strictly between ``w_prime(i)`` and
    ``w_prime(j)``. Returns ``None`` if ``w`` does not cover ``w_prime``.
    """
    if w.n != w_prime.n:
        raise DegreeMismatch(f"S_{w.n} vs S_{w_prime.n}")
    diff = [k + 1 for k in range(w.n) if w.values[k] != w_prime.values[k]]
    if len(diff) != 2:
        return None
    i, j = diff
    v = w_prime.values
    if w.values[i - 1] != v[j - 1] or w.values[j - 1] != v[i - 1]:
        return None
    if v[i - 1] < v[j - 1] and _no_intermediate(v, i, j):
        return Transposition(i, j)
    return None


def all_bruhat_lower_covers(w: Permutation) -> list[tuple[Permutation, Transposition]]:
    """Every ``w'`` covered by ``w``, with its transposition, by scanning all pairs."""
    out = []
    v = w.values
    for i in range(1, w.n + 1):
        for j in range(i + 1, w.n + 1):
            # w' = w*(i,j) must have w'(i) < w'(j), i.e. w(i) > w(j)
            if v[i - 1] <= v[j - 1]:
                continue
            t = Transposition(i, j)
            w_prime = multiply_right_transposition(w, t)
            if _no_intermediate(w_prime.values, i, j):
                out.append((w_prime, t))
    return out


def encode(w: Permutation) -> "Composition":
    """The Lehmer code: ``alpha_i = #{k > i : w(k) < w(i)}`` for ``i < n``."""
    from .composition import Composition

    v = w.values
    parts = tuple(
        sum(1 for k in range(i + 1, w.n) if v[k] < v[i]) for i in range(w.n - 1)
    )
    return Composition(parts, w.n)


def extended_code_count(w: Permutation, i: int, j: int) -> int:
    """``#{k : i < k < j, w(k) < w(i)}`` for ``1 <= i < j <= n + 1``."""
    if not 1 <= i < j <= w.n + 1:
        raise OutOfRange(f"need 1 <= i < j <= {w.n + 1}, got i={i}, j={j}")
    wi = w.values[i - 1]
    return sum(1 for k in range(i + 1, min(j, w.n + 1)) if w.values[k - 1] < wi)
