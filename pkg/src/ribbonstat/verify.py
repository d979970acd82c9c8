"""Exhaustive checks of the identities, one (partition, k) pair at a time."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .bijections import phi_series_sides
from .cycpoly import CycElem, IntPoly, as_integer_poly, eval_at_root, pochhammer, q_pochhammer, series_power_of_one_minus
from .partitions import (
    Partition,
    content_multiset,
    from_quotient,
    has_empty_core,
    hook_multiset,
    k_core,
    k_quotient,
    partitions_of,
    removable_strips,
)
from .symfunc import (
    fake_degree_at_root,
    lemma46_rhs,
    rectangular_character,
    schur_at_root,
    schur_principal,
    stanley_series,
    theorem_rhs,
)
from .tableaux import (
    count_bst,
    descents_bst,
    descents_tuple,
    descents_tuple_austrian,
    enumerate_bst,
    enumerate_syt_tuples,
    fake_degree,
    idx1,
    littlewood_inverse,
    littlewood_map,
    sign_epsilon,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    check: str
    partition: Partition
    k: int
    ok: bool
    detail: str = ""

    def sort_key(self):
        return (self.partition.size, self.check, tuple(self.partition), self.k)

    def to_json(self) -> dict:
        return {"check": self.check, "partition": list(self.partition), "k": self.k, "ok": self.ok, "detail": self.detail}


# -- individual identities ---------------------------------------------------------
# Each returns an empty string on success, otherwise a description of the failure.

def main_theorem(p: Partition, k: int) -> str:
    lhs = fake_degree_at_root(p, k)
    if lhs is None:
        return f"f({p}) at a primitive {k}-th root is not integral: {eval_at_root(fake_degree(p), k)}"
    rhs = theorem_rhs(p, k)
    if lhs != rhs:
        return f"f(xi,t) = {lhs} but eps*sum t^stat = {rhs}"
    if lhs(1) != sign_epsilon(p, k) * count_bst(p, k):
        return f"t=1 corollary fails: {lhs(1)} vs eps*|BST| = {sign_epsilon(p, k) * count_bst(p, k)}"
    return ""


def sign_constancy(p: Partition, k: int) -> str:
    parities = {B.height % 2 for B in enumerate_bst(p, k)}
    if len(parities) != 1:
        return f"height parities {sorted(parities)}"
    return ""


def littlewood(p: Partition, k: int) -> str:
    quotient = k_quotient(p, k)
    images = set()
    for B in enumerate_bst(p, k):
        T = littlewood_map(B)
        if T.shapes != quotient:
            return f"image shapes {T.shapes} != quotient {quotient}"
        if descents_bst(B).descents != descents_tuple(T).descents:
            return f"DES(B)={descents_bst(B).descents} DES(T)={descents_tuple(T).descents} for flag {B.flag}"
        if descents_tuple(T).descents != descents_tuple_austrian(T):
            return f"tilted-picture descents disagree for {T.entries}"
        if B.strips[0].height != idx1(T, k):
            return f"height(B^1)={B.strips[0].height} idx1={idx1(T, k)} for flag {B.flag}"
        if littlewood_inverse(T, k) != B:
            return f"inverse does not recover flag {B.flag}"
        images.add(T)
    targets = set(enumerate_syt_tuples(quotient))
    if images != targets:
        return f"image has {len(images)} tuples, SYT-tuples({quotient}) has {len(targets)}"
    return ""


def quotient_multisets(p: Partition, k: int) -> str:
    quotient = k_quotient(p, k)
    if from_quotient(quotient, k) != p:
        return f"from_quotient({quotient}) != {p}"
    if quotient.size * k != p.size:
        return f"quotient size {quotient.size} != {p.size}/{k}"
    hooks = Counter({h // k: m for h, m in hook_multiset(p).items() if h % k == 0})
    union = Counter()
    for comp in quotient:
        union += hook_multiset(comp)
    if hooks != union:
        return f"hooks/k {sorted(hooks.elements())} != quotient hooks {sorted(union.elements())}"
    contents = content_multiset(p)
    for r in range(k):
        lhs = Counter({(c + r) // k: m for c, m in contents.items() if (c + r) % k == 0})
        rhs = Counter()
        for i, comp in enumerate(quotient):
            shift = 0 if i < k - r else 1
            rhs += Counter({c + shift: m for c, m in content_multiset(comp).items()})
        if lhs != rhs:
            return f"r={r}: contents {sorted(lhs.elements())} != {sorted(rhs.elements())}"
    residues = Counter()
    for c, m in contents.items():
        residues[c % k] += m
    if any(residues[s] != p.size // k for s in range(k)):
        return f"content residues {dict(residues)} not all {p.size // k}"
    return ""


def strip_quotients(p: Partition, k: int) -> str:
    """Removing one k-strip removes exactly one cell from exactly one quotient component."""
    before = k_quotient(p, k)
    for _, nu in removable_strips(p, k):
        after = k_quotient(nu, k)
        diffs = [(a.size - b.size, b.contains_diagram(a)) for a, b in zip(after, before) if a != b]
        if diffs != [(-1, True)]:
            return f"{p} -> {nu}: quotient {before} -> {after}"
    return ""


def schur_root(p: Partition, k: int, m_max: int) -> str:
    for m in range(m_max + 1):
        direct = CycElem(k, schur_principal(p, m))
        predicted = schur_at_root(p, k, m)
        if direct != predicted:
            return f"m={m}: reduction {direct} != quotient product {predicted}"
    return ""


def character(p: Partition, k: int) -> str:
    chi = rectangular_character(p, k)
    expected = sign_epsilon(p, k) * count_bst(p, k) if has_empty_core(p, k) else 0
    if chi != expected:
        return f"chi={chi} expected {expected}"
    return ""


def ssyt_series(p: Partition, k: int, t_order: int) -> str:
    n = p.size
    f_root = fake_degree_at_root(p, k)
    lhs = (f_root * series_power_of_one_minus(k, -(n // k - 1), t_order)).truncate(t_order)
    values = [CycElem(k, schur_principal(p, m + 1)).as_integer() for m in range(t_order + 1)]
    if None in values:
        return f"s_p(1, xi, ..., xi^m) not integral for m={values.index(None)}"
    roots = IntPoly(values)
    middle = (IntPoly([1, -1]) * (1 - IntPoly.monomial(k)) * roots).truncate(t_order)
    rhs = lemma46_rhs(p, k, t_order)
    if not lhs == middle == rhs:
        return f"series disagree: {lhs} | {middle} | {rhs}"
    return ""


def phi_series(p: Partition, k: int, t_order: int) -> str:
    if not p:
        return ""
    lhs, rhs = phi_series_sides(k_quotient(p, k), k, t_order)
    if lhs != rhs:
        return f"{lhs} != {rhs}"
    return ""


def stanley(p: Partition) -> str:
    n = p.size
    product = (q_pochhammer(n + 1) * stanley_series(p, n)).truncate_t(n)
    if product != fake_degree(p):
        return f"(t;q)_(n+1) * series = {product} != {fake_degree(p)}"
    return ""


def pochhammer_at_root(k: int, n: int) -> str:
    lifted = as_integer_poly(eval_at_root(q_pochhammer(n + 1), k))
    if lifted != pochhammer(k, n):
        return f"(t;xi)_{n + 1} = {lifted} != {pochhammer(k, n)}"
    return ""


# -- driver ----------------------------------------------------------------------

EMPTY_CORE_CHECKS: dict[str, Callable[[Partition, int], str]] = {
    "main-theorem": main_theorem,
    "sign": sign_constancy,
    "littlewood": littlewood,
    "quotient-multisets": quotient_multisets,
    "strip-quotients": strip_quotients,
    "schur-at-root": lambda p, k: schur_root(p, k, p.size),
    "ssyt-series": lambda p, k: ssyt_series(p, k, p.size),
    "phi-series": lambda p, k: phi_series(p, k, p.size),
}


def check_pair(p: Partition, k: int) -> list[CheckResult]:
    """Every applicable check for one (partition, k) with ``k | |p|``."""
    p = Partition(p)
    out = []

    def record(name: str, fn: Callable[[], str]) -> None:
        try:
            detail = fn()
        except Exception as exc:  # a crash inside a check is a failure of that check
            detail = f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, p, k, not detail, detail))

    record("character", lambda: character(p, k))
    if has_empty_core(p, k):
        for name, fn in EMPTY_CORE_CHECKS.items():
            record(name, lambda fn=fn: fn(p, k))
    else:
        record("core", lambda: "" if k_core(p, k) else "empty core but flagged nonempty")
    if k == 1:
        record("stanley", lambda: stanley(p))
        record("pochhammer", lambda: "".join(pochhammer_at_root(d, p.size) for d in range(1, p.size + 1) if p.size % d == 0))
    return out


def _check_task(task: tuple[tuple[int, ...], int]) -> list[CheckResult]:
    parts, k = task
    return check_pair(Partition(parts), k)


def tasks(max_n: int, ks: Iterable[int] | None = None, min_n: int = 1) -> list[tuple[tuple[int, ...], int]]:
    wanted = set(ks) if ks else None
    out = []
    for n in range(min_n, max_n + 1):
        for p in partitions_of(n):
            for k in range(1, n + 1):
                if n % k == 0 and (wanted is None or k in wanted):
                    out.append((tuple(p), k))
    return out


def verify_all(max_n: int, ks: Iterable[int] | None = None, jobs: int = 1) -> list[CheckResult]:
    work = tasks(max_n, ks)
    log.info("verifying %d (partition, k) pairs with %d worker(s)", len(work), jobs)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_check_task, work, chunksize=8))
    else:
        batches = [_check_task(t) for t in work]
    results = [r for batch in batches for r in batch]
    results.sort(key=CheckResult.sort_key)
    return results


def minimal_counterexample(results: Iterable[CheckResult]) -> CheckResult | None:
    failures = sorted((r for r in results if not r.ok), key=CheckResult.sort_key)
    return failures[0] if failures else None
