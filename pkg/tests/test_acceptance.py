"""One test per acceptance criterion; each prints a PASS/FAIL line in the terminal summary."""

import random
import time
from collections import Counter

import conftest
from oracles import cells, hooks_by_counting, shape_tuples, sympy_reduce
from ribbonstat.bijections import phi, phi_inverse, phi_series_sides, weak_compositions
from ribbonstat.cycpoly import BiPoly, IntPoly, as_integer_poly, eval_at_root, pochhammer, q_pochhammer
from ribbonstat.partitions import Partition, k_core, k_quotient, partitions_of
from ribbonstat.symfunc import schur_at_root, schur_principal, stanley_series
from ribbonstat.tableaux import (
    BorderStripTableau,
    descents_bst,
    descents_tuple,
    enumerate_bst,
    enumerate_ssyt_tuples,
    enumerate_syt,
    enumerate_syt_tuples,
    fake_degree,
    idx1,
    littlewood_map,
    sign_epsilon,
    stat,
)
from ribbonstat.verify import character, main_theorem, sign_constancy

P222 = Partition([2, 2, 2])


def report(number: int, text: str, failures: list, seconds: float) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {number}: {text} ({seconds:.2f}s)"
    if failures:
        line += f" -- {len(failures)} failure(s), first: {failures[0]}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def empty_core_pairs(max_n: int, ks=None):
    for n in range(1, max_n + 1):
        for p in partitions_of(n):
            for k in ks or range(1, n + 1):
                if n % k == 0 and not k_core(p, k):
                    yield p, k


def test_criterion_1_fake_degree_golden_values():
    start = time.perf_counter()
    failures = []
    f = fake_degree(P222)
    if f != BiPoly({(12, 4): 1, (10, 3): 1, (9, 3): 1, (8, 3): 1, (6, 2): 1}):
        failures.append(f"f^222 = {f}")
    table = {1: [0, 0, 1, 3, 1], 2: [0, 0, 1, 1, 1], 3: [0, 0, 1, 0, 1], 6: [0, 0, 1, -2, 1]}
    for k, coeffs in table.items():
        got = as_integer_poly(eval_at_root(f, k))
        if got != IntPoly(coeffs):
            failures.append(f"k={k}: {got}")
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        failures.append(f"took {elapsed:.2f}s")
    report(1, "f^222(q,t) and its evaluations at k = 1, 2, 3, 6", failures, elapsed)


def test_criterion_2_golden_combinatorics():
    start = time.perf_counter()
    failures = []
    if sum(1 for _ in enumerate_syt(P222)) != 5:
        failures.append("|SYT(222)| != 5")
    for k, stats in ((2, [2, 3, 4]), (3, [2, 4])):
        got = sorted(stat(B) for B in enumerate_bst(P222, k))
        if got != stats:
            failures.append(f"BST(222,{k}) stats {got}")
        if sign_epsilon(P222, k) != 1:
            failures.append(f"eps(222,{k}) != +1")
    quotient = k_quotient(Partition([6, 5, 4, 2, 2, 2]), 3)
    if quotient != ((2, 1), (1, 1), (2,)):
        failures.append(f"3-quotient(654222) = {quotient}")
    bst_654222 = BorderStripTableau(
        3, ((), (2, 1), (3, 3), (3, 3, 3), (4, 4, 4), (4, 4, 4, 2, 1), (4, 4, 4, 2, 2, 2), (6, 5, 4, 2, 2, 2))
    )
    if (descents_bst(bst_654222).descents, bst_654222.height, stat(bst_654222)) != ((2, 4, 5), 7, 10):
        failures.append(f"654222 tableau: DES={descents_bst(bst_654222).descents} height={bst_654222.height} stat={stat(bst_654222)}")
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        failures.append(f"took {elapsed:.2f}s")
    report(2, "SYT/BST counts for 222, signs, quotient of 654222, statistics of a 3-strip tableau of 654222", failures, elapsed)


def test_criterion_3_main_theorem_exhaustive():
    start = time.perf_counter()
    failures = []
    pairs = 0
    for p, k in empty_core_pairs(10):
        pairs += 1
        detail = main_theorem(p, k)
        if detail:
            failures.append(f"{p}, k={k}: {detail}")
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        failures.append(f"took {elapsed:.0f}s")
    report(3, f"f(xi,t) = eps * sum t^stat for all {pairs} empty-core pairs with n <= 10", failures, elapsed)


def test_criterion_4_littlewood_descents_and_idx1():
    start = time.perf_counter()
    failures = []
    tableaux = 0
    for p, k in empty_core_pairs(10):
        for B in enumerate_bst(p, k):
            tableaux += 1
            T = littlewood_map(B)
            if descents_bst(B).descents != descents_tuple(T).descents:
                failures.append(f"DES mismatch at {B.flag}")
            if B.strips[0].height != idx1(T, k):
                failures.append(f"idx1 mismatch at {B.flag}")
    report(4, f"DES and height(B^1) = idx1 preserved on {tableaux} tableaux, n <= 10", failures, time.perf_counter() - start)


def test_criterion_5_height_parity():
    start = time.perf_counter()
    failures = []
    for p, k in empty_core_pairs(10):
        detail = sign_constancy(p, k)
        if detail:
            failures.append(f"{p}, k={k}: {detail}")
    report(5, "height parity constant on every nonempty BST(lambda,k), n <= 10", failures, time.perf_counter() - start)


def _quotient_identities(parts, k) -> str:
    """Hook and content multisets recomputed cell by cell, compared with the quotient components."""
    quotient = k_quotient(parts, k)
    hooks = Counter(h // k for h in hooks_by_counting(parts) if h % k == 0)
    quotient_hooks = Counter(h for comp in quotient for h in hooks_by_counting(comp))
    if hooks != quotient_hooks:
        return "hooks"
    contents = [c - r for r, c in cells(parts)]
    for r in range(k):
        lhs = Counter((c + r) // k for c in contents if (c + r) % k == 0)
        rhs = Counter()
        for i, comp in enumerate(quotient):
            shift = 0 if i < k - r else 1
            rhs.update(c - row + shift for row, c in cells(comp))
        if lhs != rhs:
            return f"contents r={r}"
    return ""


def test_criterion_6_quotient_multisets():
    start = time.perf_counter()
    failures = []
    checked = 0
    for p, k in empty_core_pairs(15):
        checked += 1
        detail = _quotient_identities(p, k)
        if detail:
            failures.append(f"{p}, k={k}: {detail}")
    rng = random.Random(20240)
    by_size = {n: list(partitions_of(n)) for n in range(16, 31)}
    sampled = 0
    while sampled < 500:
        n = rng.randint(16, 30)
        p = rng.choice(by_size[n])
        ks = [k for k in range(2, n + 1) if n % k == 0 and not k_core(p, k)]
        if not ks:
            continue
        sampled += 1
        for k in ks:
            checked += 1
            detail = _quotient_identities(p, k)
            if detail:
                failures.append(f"{p}, k={k}: {detail}")
    report(
        6,
        f"hook/content multiset identities on {checked} (lambda, k) pairs: n <= 15 exhaustive, 500 sampled with 16 <= n <= 30",
        failures,
        time.perf_counter() - start,
    )


def test_criterion_7_stanley_and_pochhammer():
    start = time.perf_counter()
    failures = []
    for n in range(0, 9):
        for p in partitions_of(n):
            product = (q_pochhammer(n + 1) * stanley_series(p, n)).truncate_t(n)
            if product != fake_degree(p):
                failures.append(f"Stanley fails for {p}")
    for n in range(1, 13):
        symbolic = q_pochhammer(n + 1)
        for k in range(1, n + 1):
            if n % k == 0 and as_integer_poly(eval_at_root(symbolic, k)) != pochhammer(k, n):
                failures.append(f"Pochhammer at k={k}, n={n}")
    report(7, "series identity for lambda |- n <= 8; Pochhammer at roots for k | n <= 12", failures, time.perf_counter() - start)


def test_criterion_8_schur_at_roots_all_residues():
    start = time.perf_counter()
    failures = []
    for p, k in empty_core_pairs(8, ks=(2, 3, 4)):
        for m in range(0, 9):
            reduced = sympy_reduce(dict(schur_principal(p, m).items()), k)
            value = schur_at_root(p, k, m)
            if reduced != ([value] if value else []):
                failures.append(f"{p}, k={k}, m={m}: {reduced} vs {value}")
    report(8, "hook-content polynomial mod Phi_k = quotient product, k in {2,3,4}, 0 <= m <= 8", failures, time.perf_counter() - start)


def test_criterion_9_phi_bijection_and_lemma():
    start = time.perf_counter()
    failures = []
    bound = 6
    shape_count = 0
    for k in range(1, 5):
        for size in range(1, 5):
            for shapes in shape_tuples(k, size):
                shape_count += 1
                image = set()
                pairs = 0
                for T in enumerate_syt_tuples(shapes):
                    des = len(descents_tuple(T))
                    for total in range(bound - des):
                        for alpha in weak_compositions(size - 1, total):
                            pairs += 1
                            S = phi(alpha, T)  # construction validates rows and columns
                            if S.max_entry != total + des + 1 or S.idx1 != idx1(T):
                                failures.append(f"weight transport at {alpha}, {T.entries}")
                            if phi_inverse(S) != (alpha, T):
                                failures.append(f"roundtrip at {alpha}, {T.entries}")
                            image.add(S)
                if len(image) != pairs or image != set(enumerate_ssyt_tuples(shapes, bound)):
                    failures.append(f"not a bijection onto max <= {bound} for {shapes}")
    for p, k in empty_core_pairs(8):
        lhs, rhs = phi_series_sides(k_quotient(p, k), k, 8)
        if lhs != rhs:
            failures.append(f"series identity for {p}, k={k}")
    report(
        9,
        f"phi bijective with weight transport on {shape_count} shape tuples (|Lambda| <= 4, max <= {bound}); series identity to t^8 for n <= 8",
        failures,
        time.perf_counter() - start,
    )


def test_criterion_10_characters():
    start = time.perf_counter()
    failures = []
    for n in range(1, 11):
        for p in partitions_of(n):
            for k in range(1, n + 1):
                if n % k == 0:
                    detail = character(p, k)
                    if detail:
                        failures.append(f"{p}, k={k}: {detail}")
    report(10, "chi(k^(n/k)) = eps*|BST| or 0 for all lambda |- n <= 10", failures, time.perf_counter() - start)

