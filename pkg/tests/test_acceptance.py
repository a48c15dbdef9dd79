"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from dpfib import cones, models, nf, verify
from dpfib.models import ANTI_K, FIBER, DivisorClassV, Dp2Box
from dpfib.verdicts import Status, classify

CLI = [sys.executable, "-m", "dpfib"]


def _cli(*args):
    return subprocess.run(CLI + list(args), capture_output=True, text=True)


def criterion_1():
    times = []
    for s in ("2", "1"):
        start = time.perf_counter()
        times.append((_cli("enumerate", "--degree", "2", "--sum", s, "--format", "json"),
                      time.perf_counter() - start))
    (out2, t2), (out1, t1) = times
    got2 = {tuple(json.loads(line)["params"]) for line in out2.stdout.splitlines()}
    got1 = {tuple(json.loads(line)["params"]) for line in out1.stdout.splitlines()}
    assert out2.returncode == out1.returncode == 0
    assert got2 == {(1, 0, 0), (0, 1, 1), (0, 0, 2), (-1, 2, 2), (-2, 2, 4), (-3, 2, 6), (-4, 2, 8)}
    assert got1 == {(0, 0, 1), (-1, 1, 2), (-2, 1, 4)}
    assert len(out2.stdout.splitlines()) == 7 and len(out1.stdout.splitlines()) == 3
    assert t1 < 1.0 and t2 < 1.0, (t1, t2)
    return f"golden lists exact, {t2:.2f}s and {t1:.2f}s including process start"


def criterion_2():
    start = time.perf_counter()
    rows = [(m, classify(m)) for m in models.enumerate_models(1, 40)]
    elapsed = time.perf_counter() - start
    non_rigid = {m.params for m, v in rows if v.status is Status.NON_RIGID}
    assert non_rigid == {(0, 2, 2, 2), (0, 0, 1, 2)}
    assert all(v.status is Status.RIGID for m, v in rows if m.epsilon > 0)
    assert elapsed < 5.0
    return f"{len(rows)} models, non-rigid {sorted(non_rigid)}, {elapsed:.2f}s"


def criterion_3():
    count = 0
    for m in models.enumerate_models(2, Dp2Box(10, 20)):
        if m.sum2ab >= 3:
            v = classify(m)
            assert v.status is Status.RIGID and v.justification == "dp2_th", m
            count += 1
    rejected = 0
    for a in range(-10, 11):
        for n2 in range(21):
            for n1 in range(n2 + 1):
                if 2 * a + n1 + n2 <= 0:
                    with pytest.raises(models.NotRealizable):
                        models.build_dp2(a, n1, n2)
                    rejected += 1
    return f"{count} rigid with dp2_th, {rejected} rejected at build time"


def criterion_4():
    texts = {}
    for case in ("dp1-eps-pos", "dp1-eps-zero", "dp1-eps-zero-A", "dp2"):
        lhs, rhs = nf.certificate_identity(case)
        assert (lhs - rhs).is_zero()
        texts[case] = nf.reduce_to_quadratic(case).coefficient_text
    assert texts == {"dp1-eps-pos": "2*n2-3*n1-5", "dp1-eps-zero": "2*n2-5",
                     "dp1-eps-zero-A": "A", "dp2": "(2-beta)*n**2"}
    assert nf.reduce_to_quadratic("dp1-eps-pos").infeasible
    assert nf.reduce_to_quadratic("dp1-eps-zero-A").infeasible
    assert nf.reduce_to_quadratic("dp2", {"beta": 2}).infeasible
    assert nf.reduce_to_quadratic("dp1-eps-zero", {"n2": 3}).infeasible
    assert not nf.feasibility_search(nf.nf_system("dp2", 1, beta=2), budget=20_000).found
    samples = []
    for n2 in (1, 2):
        assert not nf.reduce_to_quadratic("dp1-eps-zero", {"n2": n2}).infeasible
        res = nf.feasibility_search(nf.nf_system("dp1-eps-zero", 1, n2=n2),
                                    nf.SearchBox(n_values=tuple(range(1, 51))), budget=10**6)
        assert res.found and nf.check_witness(res.system, res.witness)
        samples.append(res.samples)
    return f"4 identities exact; witnesses for n2=1,2 after {samples} samples"


def criterion_5():
    r = cones.thresholds(models.build_dp1(0, 0, 1, 2), ANTI_K * 2 - FIBER * 2)
    assert r.mu == 2 and r.alpha == 1
    return f"mu={r.mu}, alpha={r.alpha}"


def criterion_6():
    ms = models.enumerate_models(1, 40) + models.enumerate_models(2, Dp2Box(10, 20))
    for m in ms:
        assert verify._k2_brute(m) == verify._k2_closed_form(m) == cones.k2_condition(m), m
    for m in models.enumerate_models(1, 40):
        if m.epsilon == 0:
            assert (cones.iskovskikh_value(m) <= 2) == (m.n2 >= 3)
    note = verify.iskovskikh_eps_pos_note()
    assert note.passed and note.note
    return f"K^2 closed forms on {len(ms)} models; NOTE: {note.detail}"


def criterion_7():
    ms = models.enumerate_models(2, Dp2Box(10, 20))
    for m in ms:
        assert models.anti_k_cube(m) == 12 - 6 * m.a - 4 * m.b == models.anti_k_cube_from_triple_products(m)
    ok, detail = verify.check_chow_properties(10_000, seed=1)
    assert ok, detail
    return f"(-K)^3 identity on {len(ms)} models; chow suite {detail}"


def criterion_8():
    T = models.flop_transform_222()
    assert T.compose(T).matrix == ((1, 0), (0, 1))
    assert T.apply(ANTI_K) == ANTI_K and T.apply(FIBER) == ANTI_K - FIBER
    for n in range(101):
        for l in range(n + 1):  # noqa: E741
            assert T.apply(DivisorClassV(n, -l)) == DivisorClassV(n - l, l)
    return "involution; 5151 classes mapped as expected"


def criterion_9():
    for n in range(1, 10**4 + 1):
        assert nf.flop_exclusion_thresholds(n, "FiberMissed") == Fraction(1, 2) - Fraction(1, n)
        assert nf.flop_exclusion_thresholds(n, "FiberMet") == Fraction(1, 8) - Fraction(1, n)
    big = 10**6
    missed = nf.flop_exclusion_thresholds(big, "FiberMissed")
    met = nf.flop_exclusion_thresholds(big, "FiberMet")
    assert Fraction(1, 2) - missed == Fraction(1, big) and Fraction(1, 8) - met == Fraction(1, big)
    assert 0 < met < Fraction(1, 8) and 0 < missed < Fraction(1, 2)
    return f"exact for 1 <= n <= 10^4; at n=10^6: {float(missed):.6f}, {float(met):.6f}"


def criterion_10():
    start = time.perf_counter()
    proc = _cli("verify")
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "FAIL" not in proc.stdout
    assert elapsed < 60
    return f"exit 0 in {elapsed:.1f}s"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _run(fn):
    try:
        detail = fn()
        return True, f"criterion {fn.__name__.split('_')[1]}: PASS ({detail})"
    except AssertionError as exc:
        return False, f"criterion {fn.__name__.split('_')[1]}: FAIL ({exc!r})"


@pytest.mark.parametrize("fn", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(fn, capsys):
    ok, line = _run(fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(fn) for fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
