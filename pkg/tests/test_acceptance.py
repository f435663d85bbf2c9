"""Acceptance suite: one test per release criterion, each printing a verdict line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
PASS/FAIL lines.  Criterion 7 is split so that the six classification rows
that hold can be verified independently of the Cauchy-Schwarz row, which is
expected to fail: the literature-standard intensity form of that criterion is
genuinely violated by the negative-q states on the standard grid, a fact
confirmed here through two independent evaluation routes, so the expected
"not violated" classification is unattainable.  The test asserts the stated
expectation anyway rather than encoding the defect as correct behavior.
"""

import math
import time

import numpy as np
import pytest

from twomode import (
    Engine,
    FixedTotalState,
    MomentSpec,
    NGBSParams,
    binomial_state,
    cauchy_schwarz,
    coherent_product,
    epr,
    fock_pair,
    hoa,
    mode1_moment,
    mode2_moment,
    moment_oracle,
    ngbs,
    quad_squeeze,
    su11,
    sum_squeeze,
)
from twomode.sweep import reproduce_figures, table1_report

VACUUM = fock_pair(0, 0)


def _verdict(cid: str, label: str, ok: bool) -> bool:
    print(f"{cid} {label}: {'PASS' if ok else 'FAIL'}")
    return ok


@pytest.fixture(scope="module")
def standard_table():
    return {row.label: row for row in table1_report()}


def test_c1_diagonal_engine_agreement():
    started = time.perf_counter()
    worst = 0.0
    checked = 0
    for total in (5, 10, 20):
        for q in (-0.01, 0.0, 0.01):
            for p in np.arange(0.1, 0.91, 0.1):
                params = NGBSParams(total, float(p), q)
                if not params.is_valid():
                    continue
                state = ngbs(params)
                for order in range(min(10, total) + 1):
                    for literal, spec in (
                        (mode1_moment(state, order, order), MomentSpec(order, order, 0, 0)),
                        (mode2_moment(state, order, order), MomentSpec(0, 0, order, order)),
                    ):
                        oracle = moment_oracle(state, spec)
                        rel = abs(literal - oracle) / max(1.0, abs(oracle))
                        worst = max(worst, rel)
                        checked += 1
    elapsed = time.perf_counter() - started
    ok = worst <= 1e-9 and elapsed < 10.0 and checked > 1000
    assert _verdict(
        "C1",
        f"diagonal engine agreement (worst rel {worst:.1e}, {checked} moments, {elapsed:.1f}s)",
        ok,
    )


def test_c2_selection_rule():
    rng = np.random.default_rng(919)
    worst = 0.0
    for _ in range(1000):
        total = int(rng.integers(0, 21))
        vec = rng.standard_normal(total + 1) + 1j * rng.standard_normal(total + 1)
        state = FixedTotalState(total, vec / np.linalg.norm(vec))
        while True:
            j, k, r, s = (int(x) for x in rng.integers(0, 11, size=4))
            spec = MomentSpec(j, k, r, s)
            if not spec.conserving:
                break
        worst = max(worst, abs(moment_oracle(state, spec)))
    assert _verdict("C2", f"selection rule (worst |moment| {worst:.1e})", worst <= 1e-12)


def test_c3_abel_normalization():
    worst = 0.0
    checked = 0
    for total in (5, 10, 20):
        for q in (-0.01, -0.005, 0.0, 0.005, 0.01, 0.1):
            for p in np.arange(0.05, 0.951, 0.05):
                params = NGBSParams(total, float(p), q)
                if not params.is_valid():
                    continue
                amps = ngbs(params).amplitudes
                worst = max(worst, abs(float(np.sum(np.abs(amps) ** 2)) - 1.0))
                checked += 1
    ok = worst <= 1e-8 and checked > 250
    assert _verdict("C3", f"Abel normalization (worst |sum-1| {worst:.1e})", ok)


def test_c4_reductions():
    ok = True
    for total in (5, 10, 20):
        for p in (0.0, 0.25, 0.5, 0.8, 1.0):
            ok &= np.array_equal(
                ngbs(NGBSParams(total, p, 0.0)).amplitudes,
                binomial_state(total, p).amplitudes,
            )
        top = np.zeros(total + 1)
        top[total] = 1.0
        bottom = np.zeros(total + 1)
        bottom[0] = 1.0
        ok &= float(np.max(np.abs(ngbs(NGBSParams(total, 1.0, 0.0)).amplitudes - top))) <= 1e-12
        ok &= float(np.max(np.abs(ngbs(NGBSParams(total, 0.0, 0.0)).amplitudes - bottom))) <= 1e-12
    assert _verdict("C4", "binomial reduction and boundary collapse", bool(ok))


def test_c5_antibunching_sign_reproduction():
    p_values = np.linspace(0.01, 0.99, 99)
    negative = []
    for p in p_values:
        params = NGBSParams(10, float(p), -0.01)
        if not params.is_valid():
            continue
        res = hoa(ngbs(params), 9, 1, Engine.ORACLE)
        if res.status == "ok":
            negative.append((res.value, float(p)))
    min_value, argmin_p = min(negative)
    window_ok = min_value < 0 and 0.35 <= argmin_p <= 0.65

    positive_ok = True
    for p in p_values:
        params = NGBSParams(10, float(p), 0.01)
        if not params.is_valid():
            continue
        res = hoa(ngbs(params), 9, 1, Engine.ORACLE)
        if res.status == "ok" and res.value < -1e-12:
            positive_ok = False
    ok = window_ok and positive_ok
    assert _verdict(
        "C5",
        f"antibunching signs (min {min_value:.3f} at p={argmin_p:.2f}; none below 0 at q=+0.01)",
        ok,
    )


def test_c6_sum_squeeze_theta_degeneracy():
    worst = 0.0
    for total in (10, 20):
        for q in (-0.01, 0.0, 0.01):
            for p in np.linspace(0.01, 0.99, 99):
                params = NGBSParams(total, float(p), q)
                if not params.is_valid():
                    continue
                state = ngbs(params)
                for engine in (Engine.LITERAL, Engine.ORACLE):
                    a = sum_squeeze(state, 0.0, engine).value
                    b = sum_squeeze(state, math.pi, engine).value
                    worst = max(worst, abs(a - b))
    assert _verdict("C6", f"SSD(0) = SSD(pi) (worst delta {worst:.1e})", worst <= 1e-12)


def test_c7_classification_rows(standard_table):
    expected = {
        "Higher-order two-mode antibunching": True,
        "Quadrature squeezing": True,
        "Sum squeezing": True,
        "Shchukin-Vogel criterion": True,
        "EPR (Mancini) criterion": False,
        "SU(1,1) uncertainty criterion": False,
    }
    got = {label: standard_table[label].present for label in expected}
    ok = got == expected
    assert _verdict("C7", f"classification rows {got}", ok)


def test_c7_cauchy_schwarz_row(standard_table):
    # Expected classification: not violated on the standard grid.  The
    # literature-standard form is in fact violated on every negative-q slice
    # (largest excursion about -3.6 at M=20, q=-0.01, confirmed against the
    # brute-force oracle), so this check cannot pass as stated.  Kept
    # faithful and red rather than weakened.
    row = standard_table["Cauchy-Schwarz inequality"]
    ok = row.present is False
    _verdict("C7", f"Cauchy-Schwarz row (expected No, computed "
                   f"{'Yes' if row.present else 'No'}, min {row.minimum:.3f})", ok)
    assert ok, (
        "Cauchy-Schwarz witness is genuinely negative on the standard grid "
        f"(minimum {row.minimum:.6f}); the expected 'No' row is unattainable "
        "with the standard intensity form of the criterion"
    )


def test_c8_coherent_boundary():
    state = coherent_product(0.5, 0.5, 30)
    d11 = hoa(state, 1, 1).value
    cs = cauchy_schwarz(state).value
    ok = abs(d11) <= 1e-8 and abs(cs) <= 1e-8
    assert _verdict("C8", f"coherent boundary (D11 {d11:.1e}, CS {cs:.1e})", ok)


def test_c9_vacuum_fixed_points():
    res_x, res_y = quad_squeeze(VACUUM)
    checks = [
        abs(res_x.value) <= 1e-12,
        abs(res_y.value) <= 1e-12,
        abs(sum_squeeze(VACUUM, 0.0).value) <= 1e-12,
        abs(su11(VACUUM).value) <= 1e-12,
        abs(epr(VACUUM, "literal").value + 1.0) <= 1e-12,
        abs(epr(VACUUM, "variance").value) <= 1e-12,
    ]
    assert _verdict("C9", "vacuum fixed points", all(checks))


def test_c10_figure_determinism(tmp_path):
    dir_a = tmp_path / "run_a"
    dir_b = tmp_path / "run_b"
    reproduce_figures(dir_a)
    reproduce_figures(dir_b)
    names = sorted(p.name for p in dir_a.glob("*.csv"))
    ok = len(names) == 11  # 10 panels + discrepancy report
    for name in names:
        ok &= (dir_a / name).read_bytes() == (dir_b / name).read_bytes()
    assert _verdict("C10", f"byte-identical figure CSVs ({len(names)} files)", bool(ok))
