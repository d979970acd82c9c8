"""Brute-force reference computations, written independently of the library code paths."""

from __future__ import annotations

from itertools import permutations, product
from math import factorial

import sympy


def cells(parts):
    return [(r, c) for r, length in enumerate(parts, start=1) for c in range(1, length + 1)]


def hooks_by_counting(parts):
    out = []
    for r, c in cells(parts):
        right = parts[r - 1] - c
        below = sum(1 for rr in range(r + 1, len(parts) + 1) if parts[rr - 1] >= c)
        out.append(right + below + 1)
    return sorted(out)


def hook_length_count(parts) -> int:
    n = sum(parts)
    den = 1
    for h in hooks_by_counting(parts):
        den *= h
    return factorial(n) // den


def _connected_no_square(cellset) -> bool:
    cellset = set(cellset)
    if not cellset:
        return False
    if any({(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cellset for r, c in cellset):
        return False
    todo = [next(iter(cellset))]
    seen = set(todo)
    while todo:
        r, c = todo.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen == cellset


def subpartitions(parts, size):
    """All partitions nu inside ``parts`` with ``|nu| = size``."""
    parts = tuple(parts)
    for rows in product(*(range(p + 1) for p in parts)):
        if sum(rows) == size and all(a >= b for a, b in zip(rows, rows[1:])):
            yield tuple(x for x in rows if x)


def brute_removable(parts, k):
    """Partitions nu with parts/nu a connected skew shape of size k with no 2x2 block."""
    n = sum(parts)
    out = set()
    for nu in subpartitions(parts, n - k):
        inner = set(cells(nu))
        diff = [x for x in cells(parts) if x not in inner]
        if _connected_no_square(diff):
            out.add(nu)
    return out


def brute_core(parts, k):
    parts = tuple(parts)
    while True:
        options = brute_removable(parts, k) if sum(parts) >= k else set()
        if not options:
            return parts
        parts = min(options)


def brute_syt(parts):
    """Standard fillings via all permutations (row-major reading), for n <= 8."""
    shape_cells = cells(parts)
    n = len(shape_cells)
    for perm in permutations(range(1, n + 1)):
        fill = dict(zip(shape_cells, perm))
        ok = all(
            (c == 1 or fill[(r, c - 1)] < v) and (r == 1 or fill[(r - 1, c)] < v)
            for (r, c), v in fill.items()
        )
        if ok:
            yield fill


def brute_fake_degree(parts) -> dict:
    out = {}
    for fill in brute_syt(parts):
        row_of = {v: r for (r, _), v in fill.items()}
        des = [i for i in range(1, sum(parts)) if row_of[i + 1] > row_of[i]]
        key = (sum(des), len(des))
        out[key] = out.get(key, 0) + 1
    return out


def brute_ssyt(parts, m):
    shape_cells = cells(parts)
    for values in product(range(1, m + 1), repeat=len(shape_cells)):
        fill = dict(zip(shape_cells, values))
        ok = all(
            (c == 1 or fill[(r, c - 1)] <= v) and (r == 1 or fill[(r - 1, c)] < v)
            for (r, c), v in fill.items()
        )
        if ok:
            yield fill


def brute_principal_schur(parts, m) -> dict:
    """``s(1, q, ..., q^{m-1})`` as ``{exponent: coeff}`` by summing q^{sum(entry - 1)}."""
    out = {}
    for fill in brute_ssyt(parts, m):
        e = sum(v - 1 for v in fill.values())
        out[e] = out.get(e, 0) + 1
    return out


q_sym, t_sym = sympy.symbols("q t")


def sympy_cyclotomic(k) -> list[int]:
    poly = sympy.Poly(sympy.cyclotomic_poly(k, q_sym), q_sym)
    return [int(c) for c in reversed(poly.all_coeffs())]


def sympy_reduce(coeff_dict: dict, k: int) -> list[int]:
    """Remainder of ``sum c q^e`` modulo the k-th cyclotomic polynomial, low degree first."""
    expr = sum(c * q_sym ** e for e, c in coeff_dict.items())
    rem = sympy.rem(sympy.Poly(expr, q_sym), sympy.Poly(sympy.cyclotomic_poly(k, q_sym), q_sym))
    coeffs = [int(c) for c in reversed(rem.all_coeffs())]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def inverse_series_in_t(coeffs_in_t: list[dict], order: int) -> list[dict]:
    """Invert a power series in t whose coefficients are q-polynomials (``{exp: coeff}``) with constant term 1."""
    def mul(a, b):
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return {e: c for e, c in out.items() if c}

    assert coeffs_in_t[0] == {0: 1}
    inv = [{0: 1}]
    for j in range(1, order + 1):
        acc = {}
        for i in range(1, j + 1):
            if i < len(coeffs_in_t):
                for e, c in mul(coeffs_in_t[i], inv[j - i]).items():
                    acc[e] = acc.get(e, 0) - c
        inv.append({e: c for e, c in acc.items() if c})
    return inv


def shape_tuples(k: int, total: int):
    """All k-tuples of partitions with sizes summing to ``total``."""
    from ribbonstat.partitions import partitions_of

    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for lam in partitions_of(first):
            for rest in shape_tuples(k - 1, total - first):
                yield (tuple(lam),) + rest
