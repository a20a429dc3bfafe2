"""
Exhaustive cross-checks between the permutation side and the code side.

Each ``verify_*`` function walks all of ``S_n`` (or ``C_n``) and returns a
:class:`VerifyReport` listing every disagreement. An empty mismatch list is the
only passing outcome.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Any

from .composition import Composition, all_compositions, weight
from .diagram import geometric_removable
from .errors import ResourceCap
from .monk import monk_terms
from .permutation import (
    Transposition,
    all_permutations,
    bruhat_cover_oracle,
    encode,
    length,
    multiply_right_transposition,
)
from .poset import HASSE_CAP, check_cover, is_removable, leq_A, removing

DEFAULT_SEED = 20240607


@dataclass
class VerifyReport:
    check: str
    n: int
    pairs_checked: int = 0
    mismatches: list[tuple[Any, ...]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self, timing: bool = False) -> str:
        # elapsed is left out by default so the report is byte-stable
        data: dict[str, Any] = {
            "check": self.check,
            "n": self.n,
            "pairs_checked": self.pairs_checked,
            "mismatches": [list(map(str, m)) for m in self.mismatches],
            "ok": self.ok,
        }
        if timing:
            data["elapsed"] = round(self.elapsed, 6)
        return json.dumps(data, sort_keys=True)

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return (
            f"{self.check} n={self.n}: {self.pairs_checked} checked, "
            f"{len(self.mismatches)} mismatches [{status}] ({self.elapsed:.3f}s)"
        )


def _guard(n: int, force: bool):
    if n > HASSE_CAP and not force:
        raise ResourceCap(f"n = {n} exceeds the cap of {HASSE_CAP} (override with --force or force=True)")


def verify_theorem(n: int, force: bool = False) -> VerifyReport:
    """Permutation covers and code covers agree, positions included, on ``S_n``."""
    _guard(n, force)
    start = time.perf_counter()
    report = VerifyReport("theorem", n)
    by_length: dict[int, list] = {}
    for w in all_permutations(n):
        by_length.setdefault(length(w), []).append((w, encode(w)))
    for ell in sorted(by_length):
        for w, alpha in by_length[ell]:
            for w_prime, alpha_prime in by_length.get(ell - 1, []):
                report.pairs_checked += 1
                t = bruhat_cover_oracle(w, w_prime)
                wit = check_cover(alpha, alpha_prime)
                oracle = None if t is None else (t.i, t.j)
                poset = None if wit is None else (wit.i, wit.j)
                if oracle != poset:
                    report.mismatches.append((w, w_prime, oracle, poset))
    report.elapsed = time.perf_counter() - start
    return report


def verify_monk(n: int, force: bool = False) -> VerifyReport:
    """Monk index sets agree with the transposition brute force for every ``r``."""
    _guard(n, force)
    start = time.perf_counter()
    report = VerifyReport("monk", n)
    for w in all_permutations(n):
        alpha, ell = encode(w), length(w)
        for r in range(1, n):
            report.pairs_checked += 1
            brute = sorted(
                (i, j)
                for i in range(1, r + 1)
                for j in range(r + 1, n + 1)
                if length(multiply_right_transposition(w, Transposition(i, j))) == ell + 1
            )
            got = [(t.i, t.j) for t in monk_terms(alpha, r)]
            if brute != got:
                report.mismatches.append((w, r, brute, got))
    report.elapsed = time.perf_counter() - start
    return report


def verify_geometric(n: int, force: bool = False) -> VerifyReport:
    """Ladder-move removal agrees with algebraic removal for every ``(i, z)``."""
    _guard(n, force)
    start = time.perf_counter()
    report = VerifyReport("geometric", n)
    for alpha in all_compositions(n):
        for i in range(1, n):
            for z in range(1, alpha[i] + 1):
                report.pairs_checked += 1
                expected = removing(alpha, i, z) if is_removable(alpha, i, z) else None
                got = geometric_removable(alpha, i, z)
                if got != expected:
                    report.mismatches.append((alpha, (i, z), expected, got))
    report.elapsed = time.perf_counter() - start
    return report


def random_comparable_pair(n: int, rng: random.Random) -> tuple[Composition, Composition]:
    """``(lower, upper)`` with ``lower <= upper`` part by part."""
    upper = tuple(rng.randint(0, n - i) for i in range(1, n))
    lower = tuple(rng.randint(0, u) for u in upper)
    return Composition(lower, n), Composition(upper, n)


def verify_product(
    n: int, samples: int = 500, seed: int = DEFAULT_SEED, force: bool = False
) -> VerifyReport:
    """Random part-wise comparable pairs are comparable in the cover order."""
    _guard(n, force)
    start = time.perf_counter()
    report = VerifyReport("product", n)
    rng = random.Random(seed)
    for _ in range(samples):
        lower, upper = random_comparable_pair(n, rng)
        report.pairs_checked += 1
        if not leq_A(lower, upper):
            report.mismatches.append((lower, upper, weight(lower), weight(upper)))
    report.elapsed = time.perf_counter() - start
    return report
