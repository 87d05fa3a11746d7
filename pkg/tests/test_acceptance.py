"""Acceptance criteria 1 to 7, each with its stated tolerance.

Every test records a PASS/FAIL line; conftest prints them at the end of the run.
"""

import time
from fractions import Fraction

from p3ext.arith import Group
from p3ext.construct import build_construction
from p3ext.expr import element_from_text
from p3ext.fixtures import reproduce
from p3ext.minpoly import RadicalAlgebra, irr_alpha_matrix
from p3ext.stats import galois_stats
from p3ext.tower import build_tower

RESULTS: dict[int, str] = {}


def record(n, passed, detail):
    line = f"criterion {n}: {'PASS' if passed else 'FAIL'} {detail}"
    RESULTS[n] = line
    print(line)
    return passed


def _fixture(n, name, limit):
    rep = reproduce(name)
    failing = [f"{c.name} ({c.detail})" for c in rep.checks if not c.passed]
    ok = rep.passed and rep.seconds < limit
    record(n, ok, f"reproduce {name} in {rep.seconds:.1f}s (limit {limit}s)" + (f"; failing: {failing}" if failing else ""))
    return ok, failing


def test_criterion_1_ex51():
    ok, failing = _fixture(1, "ex51", 10)
    assert ok, failing


def test_criterion_2_ex52():
    # Stays red: the reference Y^2 and Y coefficients have the wrong sign (see ledger).
    ok, failing = _fixture(2, "ex52", 10)
    assert ok, failing


def test_criterion_3_ex65():
    # Stays red: the reference X^6 coefficient is -3^5*5*59, the true one -3^3*5*59.
    ok, failing = _fixture(3, "ex65", 60)
    assert ok, failing


def test_criterion_4_criterion_fixtures():
    start = time.perf_counter()
    reps = [reproduce(n) for n in ("ex_r7", "ex_r19", "ex_r73", "ex_p5_r11")]
    secs = time.perf_counter() - start
    failing = [f"{r.name}: {c.name}" for r in reps for c in r.checks if not c.passed]
    ok = not failing and secs < 30
    record(4, ok, f"four criterion fixtures in {secs:.1f}s (limit 30s)" + (f"; failing: {failing}" if failing else ""))
    assert ok, failing


def test_criterion_5_property_suites():
    import test_arith
    import test_ideals
    import test_minpoly

    suites = [
        test_arith.test_phi_is_multiplicative,
        test_arith.test_norm_commutes_with_phi,
        test_arith.test_tau_twists_phi_by_e,
        test_arith.test_sigma_omega_relation,
        test_ideals.test_beta_sum_is_l,
        test_ideals.test_valuation_transport,
        test_ideals.test_chi_rotation,
        test_minpoly.test_matrix_equals_shortcut,
    ]
    failing = []
    for fn in suites:
        try:
            fn()  # a @given function runs its whole seeded suite when called
        except Exception as exc:
            failing.append(f"{fn.__name__}: {type(exc).__name__}")
    record(5, not failing, f"{len(suites)} property suites, fixed seed" + (f"; failing: {failing}" if failing else ""))
    assert not failing


def test_criterion_6_galois_statistics():
    start = time.perf_counter()
    t = build_tower(3, zeta_p2=True, e=2)
    res = build_construction(t, element_from_text("z9 + 2", t), "heisenberg")
    f = irr_alpha_matrix(res)
    rep = galois_stats(f, Group.HEISENBERG, prime_bound=10**5)
    secs = time.perf_counter() - start
    freq = rep.fully_split_frequency
    irreducible = rep.counts.get((9,), 0)
    ok = rep.passed and irreducible == 0 and abs(freq - 1 / 27) <= 0.015 and secs < 120
    record(
        6, ok,
        f"{rep.primes_used} primes, impossible patterns {len(rep.impossible)}, "
        f"fully split {freq:.4f} vs 1/27 = {1 / 27:.4f}, {secs:.1f}s (limit 120s)",
    )
    assert ok


def test_criterion_7_p5_stretch():
    start = time.perf_counter()
    t = build_tower(5, r=11)
    res = build_construction(t, element_from_text("d - z", t), "heisenberg")
    f = irr_alpha_matrix(res)
    alg = RadicalAlgebra(res)
    vanishes = all(c.is_zero() for c in alg.evaluate(f, alg.alpha()))
    secs = time.perf_counter() - start
    ok = f.degree == 25 and f.leading == Fraction(1) and vanishes and secs < 600
    record(7, ok, f"degree {f.degree}, monic {f.leading == 1}, f(alpha) = 0 {vanishes}, {secs:.1f}s (target 600s)")
    assert ok
