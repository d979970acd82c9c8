"""The map between (weak composition, standard tuple) pairs and semistandard tuples.

``phi(alpha, T)`` fills the cell holding ``s`` in ``T`` with
``1 + d_s + alpha_1 + ... + alpha_{s-1}``, where ``d_s`` counts the descents of
``T`` below ``s``.  The inverse standardizes the semistandard tuple, breaking
ties between equal entries by the key ``k * content + component`` (the only
order that creates no descents).
"""

from __future__ import annotations

from itertools import accumulate
from typing import Iterable, Iterator

from .cycpoly import IntPoly, series_power_of_one_minus
from .partitions import PartitionTuple
from .tableaux import (
    SemistandardTableauTuple,
    StandardTableauTuple,
    descents_tuple,
    enumerate_syt_tuples,
    idx1,
    is_tuple_descent,
    ssyt_tuple_series,
)


class InvariantViolation(AssertionError):
    """A property guaranteed by the theory failed to hold."""


def weak_compositions(length: int, total: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in weak_compositions(length - 1, total - first):
            yield (first,) + rest


def descent_prefix_counts(T: StandardTableauTuple) -> list[int]:
    """``d[s]`` = number of descents strictly smaller than ``s``, for ``1 <= s <= |T|`` (index 0 unused)."""
    des = set(descents_tuple(T).descents)
    return [0] + list(accumulate((1 if i - 1 in des else 0) for i in range(1, T.size + 1)))


def phi(alpha: Iterable[int], T: StandardTableauTuple) -> SemistandardTableauTuple:
    alpha = tuple(alpha)
    n = T.size
    if len(alpha) != max(n - 1, 0):
        raise ValueError(f"composition must have {n - 1} parts, got {len(alpha)}")
    if any(a < 0 for a in alpha):
        raise ValueError("composition parts must be nonnegative")
    d = descent_prefix_counts(T)
    partial = [0] + list(accumulate(alpha))
    grid = [[list(row) for row in comp] for comp in T.entries]
    for s, (comp, (r, c)) in T.positions.items():
        grid[comp][r - 1][c - 1] = 1 + d[s] + partial[s - 1]
    return SemistandardTableauTuple(tuple(tuple(tuple(row) for row in comp) for comp in grid))


def phi_inverse(S: SemistandardTableauTuple) -> tuple[tuple[int, ...], StandardTableauTuple]:
    if not S.contains_one():
        raise ValueError("tuple must contain an entry 1")
    k = S.k
    cells = list(S.cells())
    order = sorted(cells, key=lambda item: (item[2], k * item[1].content + item[0]))
    for a, b in zip(order, order[1:]):
        if a[2] == b[2]:
            if k * a[1].content + a[0] == k * b[1].content + b[0]:
                raise InvariantViolation("two equal entries share a tie-break key")
            if is_tuple_descent(a[0], a[1].content, b[0], b[1].content):
                raise InvariantViolation("tie-break order creates a descent")
    positions = {i: (s, x) for i, (s, x, _) in enumerate(order, start=1)}
    T = StandardTableauTuple.from_positions(S.shapes, positions)
    d = descent_prefix_counts(T)
    base = [v - d[i] for i, (_, _, v) in enumerate(order, start=1)]
    if base[0] != 1:
        raise InvariantViolation("the cell holding 1 does not start at 1")
    alpha = tuple(b - a for a, b in zip(base, base[1:]))
    if any(a < 0 for a in alpha):
        raise InvariantViolation(f"negative composition part in {alpha}")
    return alpha, T


def syt_tuple_series(shapes: Iterable[Iterable[int]]) -> IntPoly:
    """``sum over SYT tuples of t^{k|DES| + idx1}``."""
    shapes = PartitionTuple(shapes)
    k = shapes.k
    out: dict[int, int] = {}
    for T in enumerate_syt_tuples(shapes):
        e = k * len(descents_tuple(T)) + idx1(T, k)
        out[e] = out.get(e, 0) + 1
    return IntPoly.from_dict(out)


def phi_series_sides(shapes: Iterable[Iterable[int]], k: int, t_order: int) -> tuple[IntPoly, IntPoly]:
    """Both sides of the series identity, truncated at ``t^t_order``."""
    shapes = PartitionTuple(shapes)
    if shapes.k != k:
        raise ValueError(f"expected {k} components, got {shapes.k}")
    n_over_k = shapes.size
    lhs = (syt_tuple_series(shapes) * series_power_of_one_minus(k, -(n_over_k - 1), t_order)).truncate(t_order)
    rhs = ssyt_tuple_series(shapes, t_order)
    return lhs, rhs


def lemma52_check(shapes: Iterable[Iterable[int]], k: int, t_order: int) -> bool:
    shapes = PartitionTuple(shapes)
    if shapes.size == 0:
        # no entry 1 exists, so neither side has an idx1; treated as vacuous
        return True
    lhs, rhs = phi_series_sides(shapes, k, t_order)
    return lhs == rhs
