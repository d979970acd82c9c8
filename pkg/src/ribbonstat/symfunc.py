"""Principal Schur specializations, Murnaghan-Nakayama characters and the root-of-unity identities."""

from __future__ import annotations

import threading
from typing import Iterable

from .cycpoly import BiPoly, IntPoly, as_integer_poly, eval_at_root
from .partitions import (
    Partition,
    beta_set,
    content_multiset,
    hook_multiset,
    k_core,
    k_quotient,
)
from .tableaux import fake_degree, sign_epsilon, ssyt_tuple_series, stat_generating_function


def _require_empty_core(p: Partition, k: int) -> None:
    if p.size % k or k_core(p, k):
        raise ValueError(f"{p} does not have empty {k}-core")


class CharacterCache:
    """Memo table for ``mn_character`` that can be shared between threads."""

    def __init__(self):
        self._table: dict = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value) -> None:
        with self._lock:
            self._table.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._table)


def mn_character(p: Iterable[int], rho: Iterable[int], cache: CharacterCache | None = None) -> int:
    """``chi^p(rho)`` by the Murnaghan-Nakayama rule.

    Rim hooks are removed on the abacus (a bead slides ``r`` places down, the
    sign counts the beads it jumps), starting with the last part of ``rho``.
    """
    p, rho = Partition(p), Partition(rho)
    if p.size != rho.size:
        raise ValueError(f"|{p}| != |{rho}|")
    memo: dict = {}

    def chi(beta: frozenset, j: int) -> int:
        if j == 0:
            return 1
        key = (beta, j)
        if key in memo:
            return memo[key]
        hit = cache.get((rho[:j], beta)) if cache is not None else None
        if hit is not None:
            return hit
        r = rho[j - 1]
        total = 0
        for b in beta:
            if b - r >= 0 and b - r not in beta:
                jumped = sum(1 for x in beta if b - r < x < b)
                sign = -1 if jumped % 2 else 1
                total += sign * chi(beta - {b} | {b - r}, j - 1)
        memo[key] = total
        if cache is not None:
            cache.put((rho[:j], beta), total)
        return total

    return chi(_normalized_beta(p), len(rho))


def _normalized_beta(p: Partition) -> frozenset:
    return frozenset(beta_set(p, len(p)))


def ssyt_count(p: Iterable[int], m: int) -> int:
    """Number of SSYT of shape ``p`` with entries ``<= m`` (hook-content formula at q = 1)."""
    p = Partition(p)
    if not p:
        return 1
    if m < len(p):
        return 0
    num = 1
    for c, mult in content_multiset(p).items():
        num *= (m + c) ** mult
    den = 1
    for h, mult in hook_multiset(p).items():
        den *= h ** mult
    quot, rem = divmod(num, den)
    assert rem == 0
    return quot


def b_statistic(p: Partition) -> int:
    return sum(i * part for i, part in enumerate(p))


def schur_principal(p: Iterable[int], m: int) -> IntPoly:
    """``s_p(1, q, ..., q^{m-1})`` via the q-hook-content formula."""
    p = Partition(p)
    if not p:
        return IntPoly([1])
    if m < len(p):
        return IntPoly()
    num = IntPoly.monomial(b_statistic(p))
    for c, mult in content_multiset(p).items():
        num = num * (1 - IntPoly.monomial(m + c)) ** mult
    for h, mult in hook_multiset(p).items():
        for _ in range(mult):
            num = num.exact_div(1 - IntPoly.monomial(h))
    return num


def schur_at_root(p: Iterable[int], k: int, m: int) -> int:
    """``s_p(1, xi, ..., xi^{m-1})`` for a primitive k-th root ``xi``, from the k-quotient."""
    p = Partition(p)
    _require_empty_core(p, k)
    ell, r = divmod(m, k)
    quotient = k_quotient(p, k)
    value = sign_epsilon(p, k)
    for i, comp in enumerate(quotient):
        value *= ssyt_count(comp, ell if i < k - r else ell + 1)
    return value


def stanley_series(p: Iterable[int], t_order: int) -> BiPoly:
    """``sum_{m=0}^{t_order} t^m s_p(1, q, ..., q^m)``."""
    p = Partition(p)
    return BiPoly.from_t_coeffs({m: schur_principal(p, m + 1) for m in range(t_order + 1)})


def fake_degree_at_root(p: Iterable[int], k: int) -> IntPoly | None:
    """``f^p(xi, t)`` as an integer polynomial, or None if it is not integral."""
    return as_integer_poly(eval_at_root(fake_degree(Partition(p)), k))


def theorem_rhs(p: Iterable[int], k: int) -> IntPoly:
    """``epsilon * sum over BST(p, k) of t^stat``."""
    p = Partition(p)
    _require_empty_core(p, k)
    return sign_epsilon(p, k) * stat_generating_function(p, k)


def lemma46_rhs(p: Iterable[int], k: int, t_order: int) -> IntPoly:
    """``epsilon * sum over SSYT tuples on the k-quotient of t^{k(max - 1) + idx1}``, truncated."""
    p = Partition(p)
    _require_empty_core(p, k)
    if not p:
        return IntPoly([1])
    return sign_epsilon(p, k) * ssyt_tuple_series(k_quotient(p, k), t_order)


def rectangular_character(p: Iterable[int], k: int) -> int:
    """``chi^p(k^{n/k})``; zero exactly when the k-core is nonempty."""
    p = Partition(p)
    if p.size % k:
        raise ValueError(f"k={k} does not divide {p.size}")
    return mn_character(p, Partition([k] * (p.size // k)))
