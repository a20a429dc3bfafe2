"""
Index sets for Monk's rule, computed on codes.

For a permutation ``w`` and ``r >= 1`` the product of the Schubert
polynomials of ``s_r`` and ``w`` runs over the covers ``w * (i, j)`` with
``i <= r < j``. On codes these are the ``(i, z)``-insertions with
``i <= r < hat_J(i, z)``; only the index set and target codes are produced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .composition import Composition, weight
from .errors import OutOfRange
from .poset import hat_J, insertion_bound, is_insertable


@dataclass(frozen=True, order=True)
class MonkTerm:
    i: int
    j: int
    target: Composition

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "target": str(self.target)}


def monk_terms(alpha: Composition, r: int) -> list[MonkTerm]:
    """Terms with targets in the same ``C_n`` as ``alpha``; needs ``1 <= r <= n - 1``."""
    if not 1 <= r <= alpha.n - 1:
        raise OutOfRange(f"r = {r} outside [1, {alpha.n - 1}]")
    terms = []
    for i in range(1, r + 1):
        for z in range(1, insertion_bound(alpha, i) + 1):
            if not is_insertable(alpha, i, z):
                continue
            j = hat_J(alpha, i, z)
            # hat_J strictly decreases in z over insertable z
            if j <= r:
                break
            target = alpha.replace({i: alpha[i] + z, j: alpha[j] - z + 1})
            assert weight(target) == weight(alpha) + 1
            terms.append(MonkTerm(i, j, target))
    return sorted(terms)


def stable_degree(alpha: Composition, r: int) -> int:
    """A degree large enough that no term of the ``S_infinity`` sum is cut off."""
    return max(alpha.n, r) + 1


def monk_terms_stable(alpha: Composition, r: int) -> tuple[int, list[MonkTerm]]:
    """Terms of the full sum, reading ``alpha`` as a code in ``S_infinity``.

    Returns the degree the computation was embedded into alongside the terms.
    """
    if r < 1:
        raise OutOfRange(f"r = {r} must be positive")
    n = stable_degree(alpha, r)
    return n, monk_terms(alpha.embed(n), r)
