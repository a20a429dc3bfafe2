"""
Words in the simple transpositions ``s_1, ..., s_{n-1}``.

A word is a tuple of generator indices; ``s_k`` acts on the right of a
permutation by swapping the values in positions ``k`` and ``k + 1``. The
row-reading of a code reads row ``i`` of its diagram right to left,
``s_{alpha_i + i - 1} ... s_{i+1} s_i``, rows taken bottom to top.

When ``alpha`` covers ``alpha'`` with witness ``(i, j, z)``, deleting one
letter of the row-reading of ``alpha`` gives a reduced word for the lower
permutation, and :func:`move_schedule` produces the explicit commutation and
braid moves that turn that word into the row-reading of ``alpha'``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .composition import Composition, c_entry
from .errors import InvalidWitness, OutOfRange, PatternMismatch
from .permutation import Permutation, identity, length
from .poset import CoverWitness, check_cover


class Move(str, enum.Enum):
    COMMUTATION = "commutation"
    BRAID = "braid"


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(int(k) for k in self.letters)
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters))

    @classmethod
    def parse(cls, text: str, n: int) -> "ReducedWord":
        return cls(tuple(int(t) for t in text.split()), n)


def row_reading_rows(alpha: Composition) -> list[tuple[int, ...]]:
    """Row ``i`` of the reading as its own tuple (empty rows included)."""
    return [
        tuple(range(a + i - 1, i - 1, -1))
        for i, a in enumerate(alpha.parts, start=1)
    ]


def row_reading(alpha: Composition) -> ReducedWord:
    return ReducedWord(tuple(k for row in row_reading_rows(alpha) for k in row), alpha.n)


def format_rows(alpha: Composition) -> str:
    """The reading grouped by row, e.g. ``s4 s3 s2 s1 · s6 s5 ...``."""
    groups = [" ".join(f"s{k}" for k in row) for row in row_reading_rows(alpha) if row]
    return " · ".join(groups) if groups else "e"


def evaluate(word: ReducedWord) -> Permutation:
    values = list(identity(word.n).values)
    for k in word.letters:
        if not 1 <= k <= word.n - 1:
            raise OutOfRange(f"letter s_{k} is not a generator of S_{word.n}")
        values[k - 1], values[k] = values[k], values[k - 1]
    return Permutation(tuple(values))


def is_reduced(word: ReducedWord) -> bool:
    return len(word) == length(evaluate(word))


def delete_letter(word: ReducedWord, position: int) -> ReducedWord:
    if not 1 <= position <= len(word):
        raise OutOfRange(f"position {position} outside [1, {len(word)}]")
    letters = word.letters
    return ReducedWord(letters[: position - 1] + letters[position:], word.n)


def apply_move(word: ReducedWord, at: int, kind: Move | str) -> ReducedWord:
    """Rewrite the letters starting at 1-based position ``at``.

    A commutation swaps ``s_a s_b`` with ``|a - b| >= 2``; a braid rewrites
    ``s_a s_b s_a`` as ``s_b s_a s_b`` with ``|a - b| = 1``.
    """
    kind = Move(kind)
    letters = list(word.letters)
    k = at - 1
    if kind is Move.COMMUTATION:
        if not 0 <= k < len(letters) - 1:
            raise PatternMismatch(f"no pair of letters at position {at}")
        a, b = letters[k], letters[k + 1]
        if abs(a - b) < 2:
            raise PatternMismatch(f"s{a} s{b} do not commute")
        letters[k], letters[k + 1] = b, a
    else:
        if not 0 <= k < len(letters) - 2:
            raise PatternMismatch(f"no triple of letters at position {at}")
        a, b, c = letters[k : k + 3]
        if a != c or abs(a - b) != 1:
            raise PatternMismatch(f"s{a} s{b} s{c} is not a braid pattern")
        letters[k : k + 3] = [b, a, b]
    return ReducedWord(tuple(letters), word.n)


def _lower_of(alpha: Composition, witness: CoverWitness) -> Composition:
    i, j, z = witness
    try:
        lower = alpha.replace({i: alpha[i] - z, j: alpha[j] + z - 1})
    except ValueError:
        raise InvalidWitness(f"{witness} does not fit {alpha}") from None
    if check_cover(alpha, lower) != witness:
        raise InvalidWitness(f"{witness} is not a cover witness for {alpha}")
    return lower


def cover_index(alpha: Composition, witness: CoverWitness) -> int:
    """Position of the letter of ``row_reading(alpha)`` whose deletion gives the lower cover."""
    _lower_of(alpha, witness)
    return sum(alpha.parts[: witness.i - 1]) + witness.z


def move_schedule(alpha: Composition, witness: CoverWitness) -> list[tuple[int, Move]]:
    """Moves turning the deleted row-reading into ``row_reading(alpha')``.

    The ``z - 1`` letters left over in row ``i`` after the deletion travel, the
    rightmost one first, across rows ``i .. j - 1``: a letter commutes through a
    row whose path value ``alpha_k + c_{i,k}`` is below ``alpha'_i`` and
    braids once through a row where it is at least ``alpha_i``. Each one lands
    at the front of row ``j``. Positions refer to the word as it stands when
    the move is applied.
    """
    lower = _lower_of(alpha, witness)
    i, j, z = witness
    if z == 1:
        return []
    word = delete_letter(row_reading(alpha), cover_index(alpha, witness))
    new_i = alpha[i] - z
    prefix = sum(alpha.parts[: i - 1])
    moves: list[tuple[int, Move]] = []

    def push(pos, kind):
        nonlocal word
        word = apply_move(word, pos, kind)
        moves.append((pos, kind))

    for t, m in enumerate(range(new_i + 1, alpha[i])):
        pos = prefix + (z - 1) - t
        assert word.letters[pos - 1] == m + i
        for _ in range(new_i):
            push(pos, Move.COMMUTATION)
            pos += 1
        for k in range(i + 1, j):
            c = c_entry(alpha, i, k)
            letter = m + k - 1 - c
            assert word.letters[pos - 1] == letter
            if alpha[k] + c < new_i:
                for _ in range(alpha[k]):
                    push(pos, Move.COMMUTATION)
                    pos += 1
            elif alpha[k] + c >= alpha[i]:
                for _ in range(alpha[k] + k - letter - 2):
                    push(pos, Move.COMMUTATION)
                    pos += 1
                push(pos, Move.BRAID)
                pos += 2
                for _ in range(letter - k):
                    push(pos, Move.COMMUTATION)
                    pos += 1
            else:
                raise InvalidWitness(f"row {k} admits neither passage for {witness}")
    target = row_reading(lower)
    if word != target:
        raise AssertionError(f"schedule for {alpha} {witness} ended at {word}, not {target}")
    return moves


def replay(word: ReducedWord, schedule: Sequence[tuple[int, Move]]) -> list[ReducedWord]:
    """Every intermediate word, starting with ``word`` itself."""
    out = [word]
    for pos, kind in schedule:
        word = apply_move(word, pos, kind)
        out.append(word)
    return out
