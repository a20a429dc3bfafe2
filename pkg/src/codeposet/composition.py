"""
Staircase compositions and the c-matrix.

A composition of degree ``n`` has parts ``alpha_1, ..., alpha_{n-1}`` with
``0 <= alpha_i <= n - i``; parts past ``n - 1`` are read as 0. Compositions are
stored at full length ``n - 1`` so that equality is structural on
``(parts, n)``.

The c-matrix entry ``c_{i,j}`` is built by a recursion in ``j``: it is 0 for
``j <= i + 1`` and otherwise grows by one exactly when
``alpha_{j-1} < alpha_i - c_{i,j-1}``. For a code in ``C_n`` every row is
constant from column ``n + 1`` on, so the matrix is kept as
``(n - 1) x (n + 1)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NoDescent, OutOfRange, ParseError, StaircaseViolation
from .permutation import Permutation


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]
    n: int

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise OutOfRange("degree must be at least 1")
        parts = tuple(int(p) for p in self.parts)
        for idx, p in enumerate(parts, start=1):
            if p < 0:
                raise StaircaseViolation(idx, p, n)
            if idx <= n - 1 and p > n - idx:
                raise StaircaseViolation(idx, p, n)
            if idx > n - 1 and p != 0:
                raise StaircaseViolation(idx, p, n)
        parts = parts[: n - 1] + (0,) * (n - 1 - len(parts))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "parts", parts)

    def __getitem__(self, k: int) -> int:
        """1-based part ``alpha_k``; zero past the stored length."""
        if k < 1:
            raise OutOfRange(f"part index {k} < 1")
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts)) + f"@{self.n}"

    def replace(self, updates: dict[int, int]) -> "Composition":
        parts = list(self.parts)
        for k, v in updates.items():
            if k > len(parts):
                parts.extend([0] * (k - len(parts)))
            parts[k - 1] = v
        return Composition(tuple(parts), self.n)

    def embed(self, n: int) -> "Composition":
        return Composition(self.parts, n)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Read ``"4,5,4,1,0,2,0@8"``; without ``@n`` the degree is ``len + 1``."""
        text = text.strip()
        body, sep, deg = text.partition("@")
        try:
            parts = tuple(int(t) for t in body.split(",")) if body.strip() else ()
            n = int(deg) if sep else len(parts) + 1
        except ValueError:
            raise ParseError(f"cannot read a composition from {text!r}") from None
        return cls(parts, n)

    def to_json(self) -> dict:
        return {"n": self.n, "parts": list(self.parts)}

    @classmethod
    def from_json(cls, data: dict | str) -> "Composition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["parts"]), data["n"])


def validate(parts: Sequence[int], n: int) -> Composition:
    return Composition(tuple(parts), n)


def all_compositions(n: int) -> Iterator[Composition]:
    """Every element of ``C_n``, lexicographically."""
    for parts in itertools.product(*(range(n - i + 1) for i in range(1, n))):
        yield Composition(parts, n)


def weight(alpha: Composition) -> int:
    return sum(alpha.parts)


def capital_N(alpha: Composition) -> int:
    """``max(alpha_i + i)`` over nonzero parts; 1 for the all-zero composition."""
    return _capital_N(alpha.parts)


def _capital_N(parts: Sequence[int]) -> int:
    return max((p + i for i, p in enumerate(parts, start=1) if p), default=1)


def _c_row(parts: Sequence[int], i: int, jmax: int) -> list[int]:
    # row[j] = c_{i,j} for 0 <= j <= jmax; row[0] is padding
    m = len(parts)
    ai = parts[i - 1] if i <= m else 0
    row = [0] * (jmax + 1)
    c = 0
    for j in range(i + 2, jmax + 1):
        prev = parts[j - 2] if j - 1 <= m else 0
        if prev < ai - c:
            c += 1
        row[j] = c
    return row


def _check_row(alpha: Composition, i: int):
    if not 1 <= i <= alpha.n - 1:
        raise OutOfRange(f"row {i} outside [1, {alpha.n - 1}]")


def c_entry(alpha: Composition, i: int, j: int) -> int:
    _check_row(alpha, i)
    if j < 1:
        raise OutOfRange(f"column {j} < 1")
    j = min(j, alpha.n + 1)
    if j <= i + 1:
        return 0
    ai = alpha.parts[i - 1]
    c = 0
    for col in range(i + 2, j + 1):
        if alpha[col - 1] < ai - c:
            c += 1
    return c


def c_row(alpha: Composition, i: int) -> list[int]:
    """``[c_{i,1}, ..., c_{i,n+1}]``."""
    _check_row(alpha, i)
    return _c_row(alpha.parts, i, alpha.n + 1)[1:]


def c_matrix(alpha: Composition) -> list[list[int]]:
    """Dense ``(n - 1) x (n + 1)`` table; ``c_matrix(a)[i-1][j-1] == c_entry(a, i, j)``."""
    return [c_row(alpha, i) for i in range(1, alpha.n)]


def decode(alpha: Composition) -> Permutation:
    """The unique permutation whose Lehmer code is ``alpha``.

    ``w(i)`` is the ``(alpha_i + 1)``-th smallest label not used by
    ``w(1), ..., w(i - 1)``.
    """
    n = alpha.n
    used = [False] * (n + 1)
    values = []
    for i in range(1, n + 1):
        rank = alpha[i]
        for label in range(1, n + 1):
            if used[label]:
                continue
            if rank == 0:
                used[label] = True
                values.append(label)
                break
            rank -= 1
    return Permutation(tuple(values))


def dual(alpha: Composition) -> Composition:
    n = alpha.n
    return Composition(tuple(n - i - a for i, a in enumerate(alpha.parts, start=1)), n)


def k_alpha(alpha: Composition, i: int) -> int:
    """Least ``k > i`` with ``alpha_k < alpha_i``."""
    _check_row(alpha, i)
    ai = alpha[i]
    if ai == 0:
        raise NoDescent(f"alpha_{i} = 0, so no later part is smaller")
    k = i + 1
    while alpha[k] >= ai:
        k += 1
    return k
