"""
The cover relation on staircase compositions and the poset it generates.

``alpha`` covers ``alpha'`` in positions ``(i, j)`` when ``|alpha| = |alpha'| + 1``,
part ``i`` drops by ``z >= 1``, part ``j > i`` grows by ``z - 1``, every other
part agrees, and both c-rows at ``(i, j)`` equal ``alpha'_i - alpha_j``.

Lower covers are found one ``(i, z)`` at a time: decreasing part ``i`` by ``z``
perturbs row ``i`` of the c-matrix, the last column where the perturbed row
still agrees with the original (``tilde_J``) is the only candidate for ``j``,
and a single equation decides whether the cover exists. Upper covers are the
mirror image under ``alpha_i -> n - i - alpha_i``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .composition import (
    Composition,
    _c_row,
    _capital_N,
    all_compositions,
    dual,
    k_alpha,
    weight,
)
from .errors import (
    DegreeMismatch,
    NotInsertable,
    NotRemovable,
    OutOfRange,
    ResourceCap,
)

HASSE_CAP = 9


@dataclass(frozen=True, order=True)
class CoverWitness:
    i: int
    j: int
    z: int

    def __iter__(self):
        return iter((self.i, self.j, self.z))

    def __str__(self):
        return f"({self.i},{self.j},{self.z})"


def _same_degree(a: Composition, b: Composition):
    if a.n != b.n:
        raise DegreeMismatch(f"C_{a.n} vs C_{b.n}")


def _last_agreement(parts, other, i: int) -> int:
    # both rows are constant from column N + 1 on and differ there
    jmax = max(_capital_N(parts), _capital_N(other)) + 1
    ra = _c_row(parts, i, jmax)
    rb = _c_row(other, i, jmax)
    return max(j for j in range(i + 1, jmax + 1) if ra[j] == rb[j])


def _shifted(alpha: Composition, i: int, delta: int) -> tuple[int, ...]:
    parts = list(alpha.parts)
    parts[i - 1] += delta
    return tuple(parts)


def _check_removal_range(alpha: Composition, i: int, z: int):
    if not 1 <= i <= alpha.n - 1:
        raise OutOfRange(f"row {i} outside [1, {alpha.n - 1}]")
    if not 1 <= z <= alpha[i]:
        raise OutOfRange(f"z = {z} outside [1, alpha_{i}] = [1, {alpha[i]}]")


def _check_insertion_range(alpha: Composition, i: int, z: int):
    if not 1 <= i <= alpha.n - 1:
        raise OutOfRange(f"row {i} outside [1, {alpha.n - 1}]")
    room = alpha.n - i - alpha[i]
    if not 1 <= z <= room:
        raise OutOfRange(f"z = {z} outside [1, n - i - alpha_i] = [1, {room}]")


def tilde_J(alpha: Composition, i: int, z: int) -> int:
    """Greatest ``j > i`` where row ``i`` of ``c`` is unchanged by ``alpha_i -= z``."""
    _check_removal_range(alpha, i, z)
    return _last_agreement(alpha.parts, _shifted(alpha, i, -z), i)


def hat_J(alpha: Composition, i: int, z: int) -> int:
    """Greatest ``j > i`` where row ``i`` of ``c`` is unchanged by ``alpha_i += z``."""
    _check_insertion_range(alpha, i, z)
    j = _last_agreement(alpha.parts, _shifted(alpha, i, z), i)
    assert j == tilde_J(dual(alpha), i, z)
    return j


def is_removable(alpha: Composition, i: int, z: int) -> bool:
    j = tilde_J(alpha, i, z)
    c = _c_row(alpha.parts, i, j)[j]
    return c == alpha[i] - alpha[j] - z


def is_insertable(alpha: Composition, i: int, z: int) -> bool:
    j = hat_J(alpha, i, z)
    c = _c_row(alpha.parts, i, j)[j]
    return c == alpha[i] - alpha[j] + z - 1


def removing(alpha: Composition, i: int, z: int) -> Composition:
    """The unique lower cover with ``alpha'_i = alpha_i - z``."""
    if not is_removable(alpha, i, z):
        raise NotRemovable(f"{alpha} is not ({i},{z})-removable")
    j = tilde_J(alpha, i, z)
    return alpha.replace({i: alpha[i] - z, j: alpha[j] + z - 1})


def insertion(alpha: Composition, i: int, z: int) -> Composition:
    """The unique upper cover with ``alpha''_i = alpha_i + z``."""
    if not is_insertable(alpha, i, z):
        raise NotInsertable(f"{alpha} is not ({i},{z})-insertable")
    j = hat_J(alpha, i, z)
    return alpha.replace({i: alpha[i] + z, j: alpha[j] - z + 1})


def check_cover(alpha: Composition, alpha_prime: Composition) -> Optional[CoverWitness]:
    """The witness ``(i, j, z)`` if ``alpha`` covers ``alpha_prime``, else ``None``."""
    _same_degree(alpha, alpha_prime)
    if weight(alpha) != weight(alpha_prime) + 1:
        return None
    diff = [k for k in range(1, alpha.n) if alpha[k] != alpha_prime[k]]
    if len(diff) == 1:
        (i,) = diff
        z = alpha[i] - alpha_prime[i]
        if z != 1:
            return None
        j = tilde_J(alpha, i, 1)
    elif len(diff) == 2:
        i, j = diff
        z = alpha[i] - alpha_prime[i]
        if z < 2 or alpha_prime[j] != alpha[j] + z - 1:
            return None
    else:
        return None
    target = alpha_prime[i] - alpha[j]
    if _c_row(alpha.parts, i, j)[j] != target:
        return None
    if _c_row(alpha_prime.parts, i, j)[j] != target:
        return None
    return CoverWitness(i, j, z)


@lru_cache(maxsize=None)
def _lower_covers(alpha: Composition) -> tuple[tuple[Composition, CoverWitness], ...]:
    out = []
    for i in range(1, alpha.n):
        if alpha[i] == 0:
            continue
        zmax = alpha[i] - alpha[k_alpha(alpha, i)]
        for z in range(1, zmax + 1):
            if is_removable(alpha, i, z):
                j = tilde_J(alpha, i, z)
                lower = alpha.replace({i: alpha[i] - z, j: alpha[j] + z - 1})
                out.append((lower, CoverWitness(i, j, z)))
    return tuple(out)


def lower_covers(alpha: Composition) -> list[tuple[Composition, CoverWitness]]:
    """Every ``alpha'`` covered by ``alpha``, ordered by ``(i, z)``."""
    return list(_lower_covers(alpha))


def insertion_bound(alpha: Composition, i: int) -> int:
    """Largest ``z`` for which ``alpha`` can possibly be ``(i, z)``-insertable."""
    room = alpha.n - i - alpha[i]
    if room == 0:
        return 0
    k = k_alpha(dual(alpha), i)
    return min(room, alpha[k] - alpha[i] + k - i)


def upper_covers(alpha: Composition) -> list[tuple[Composition, CoverWitness]]:
    """Every ``alpha''`` covering ``alpha``; the witness is that of ``alpha'' -> alpha``."""
    out = []
    for i in range(1, alpha.n):
        for z in range(1, insertion_bound(alpha, i) + 1):
            if is_insertable(alpha, i, z):
                j = hat_J(alpha, i, z)
                upper = alpha.replace({i: alpha[i] + z, j: alpha[j] - z + 1})
                out.append((upper, CoverWitness(i, j, z)))
    return out


def leq_A(alpha: Composition, beta: Composition) -> bool:
    """Whether ``alpha <= beta`` in the order generated by the covers.

    Walks down from ``beta`` one weight level at a time and stops at the
    level of ``alpha``.
    """
    _same_degree(alpha, beta)
    target = weight(alpha)
    level = {beta}
    for _ in range(weight(beta) - target):
        level = {lower for node in level for lower, _ in _lower_covers(node)}
    return alpha in level


@dataclass
class HasseDiagram:
    n: int
    nodes: list[Composition]
    edges: list[tuple[Composition, Composition, CoverWitness]] = field(default_factory=list)

    def rank(self, node: Composition) -> int:
        return weight(node)

    def levels(self) -> dict[int, list[Composition]]:
        out: dict[int, list[Composition]] = {}
        for node in self.nodes:
            out.setdefault(weight(node), []).append(node)
        return out

    def to_jsonl(self) -> str:
        lines = [
            json.dumps({"upper": str(u), "lower": str(l), "i": w.i, "j": w.j, "z": w.z})
            for u, l, w in self.edges
        ]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box fontname=monospace];"]
        for rank, nodes in sorted(self.levels().items()):
            names = " ".join(f'"{node}"' for node in nodes)
            lines.append(f"  {{rank=same; {names}}}")
        for upper, lower, w in self.edges:
            lines.append(f'  "{lower}" -> "{upper}" [label="{w.i},{w.j}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _edges_of(alpha: Composition):
    return [(alpha, lower, w) for lower, w in _lower_covers(alpha)]


def hasse(n: int, *, force: bool = False, workers: int = 1) -> HasseDiagram:
    """All ``n!`` codes ranked by weight, with one edge per cover."""
    if n < 1:
        raise OutOfRange("degree must be at least 1")
    if n > HASSE_CAP and not force:
        raise ResourceCap(f"n = {n} exceeds the cap of {HASSE_CAP} (override with --force or force=True)")
    nodes = sorted(all_compositions(n), key=lambda a: (weight(a), a.parts))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks: Iterable = pool.map(_edges_of, nodes, chunksize=256)
            edges = [e for chunk in chunks for e in chunk]
    else:
        edges = [e for node in nodes for e in _edges_of(node)]
    return HasseDiagram(n, nodes, edges)
