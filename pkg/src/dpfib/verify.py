"""Self-verification suite.

Each check recomputes a known result through an independent route and
reports pass/fail.  Notes are informational and never fail the suite.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Callable, Iterable

from . import chow, cones, models, nf
from .verdicts import Status, classify
from .errors import DpfibError, InvalidArgument
from .models import ANTI_K, FIBER, Dp2Box, DivisorClassV

GOLDEN_SUM2 = [(-4, 2, 8), (-3, 2, 6), (-2, 2, 4), (-1, 2, 2), (0, 0, 2), (0, 1, 1), (1, 0, 0)]
GOLDEN_SUM1 = [(-2, 1, 4), (-1, 1, 2), (0, 0, 1)]
DP1_NON_RIGID = {(0, 2, 2, 2), (0, 0, 1, 2)}


@dataclass(frozen=True)
class VerifyBox:
    dp1_n3: int = 40
    dp2_a: int = 10
    dp2_n2: int = 20
    chow_cases: int = 10_000
    flop_n: int = 10_000
    witness_budget: int = 1_000_000
    seed: int = 0

    @classmethod
    def parse(cls, spec: str | None) -> "VerifyBox":
        """Parse ``"dp1_n3=20,dp2_a=5"``; unknown keys raise."""
        if not spec:
            return cls()
        names = {f.name for f in fields(cls)}
        values = {}
        for item in spec.split(","):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in names:
                raise InvalidArgument(f"bad box entry {item!r}; keys are {sorted(names)}")
            try:
                values[key] = int(value)
            except ValueError:
                raise InvalidArgument(f"box value for {key} must be an int, got {value!r}") from None
        box = cls(**values)
        if min(box.dp1_n3, box.dp2_a, box.dp2_n2) < 0 or min(box.chow_cases, box.flop_n, box.witness_budget) < 1:
            raise InvalidArgument(f"box bounds out of range: {box}")
        return box


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    note: bool = False
    seconds: float = 0.0

    def line(self) -> str:
        tag = "NOTE" if self.note else ("PASS" if self.passed else "FAIL")
        tail = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {tag}{tail}"

    def to_json(self) -> dict:
        return {"name": self.name, "status": "NOTE" if self.note else ("PASS" if self.passed else "FAIL"),
                "detail": self.detail, "seconds": round(self.seconds, 3)}


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"schema": 1, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def _timed(name: str, fn: Callable[[], tuple[bool, str]], limit: float | None = None) -> Check:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        passed, detail = False, f"{detail}; took {elapsed:.2f}s >= {limit}s"
    return Check(name, passed, detail, seconds=elapsed)


# ---------------------------------------------------------------------------
# individual checks; each returns (passed, detail)


def check_golden_lists() -> tuple[bool, str]:
    got2 = [m.params for m in models.enumerate_models(2, 2)]
    got1 = [m.params for m in models.enumerate_models(2, 1)]
    return got2 == GOLDEN_SUM2 and got1 == GOLDEN_SUM1, f"sum2={got2} sum1={got1}"


def check_dp1_classification(max_n3: int) -> tuple[bool, str]:
    rows = [(m, classify(m)) for m in models.enumerate_models(1, max_n3)]
    non_rigid = {m.params for m, v in rows if v.status is Status.NON_RIGID}
    eps_pos_ok = all(v.status is Status.RIGID for m, v in rows if m.epsilon > 0)
    expected = {p for p in DP1_NON_RIGID if p[3] <= max_n3}
    return non_rigid == expected and eps_pos_ok, f"{len(rows)} models, non-rigid {sorted(non_rigid)}"


def check_dp2_rigidity(box: Dp2Box) -> tuple[bool, str]:
    bad = []
    count = 0
    for m in models.enumerate_models(2, box):
        v = classify(m)
        if m.sum2ab >= 3:
            count += 1
            if v.status is not Status.RIGID or v.justification != "dp2_th":
                bad.append(m.params)
        if (v.status is Status.RIGID) != (m.beta <= 2):
            bad.append(m.params)
    rejected = 0
    for a in range(-box.a_max, box.a_max + 1):
        for n2 in range(box.n2_max + 1):
            for n1 in range(n2 + 1):
                if 2 * a + n1 + n2 <= 0:
                    try:
                        models.build_dp2(a, n1, n2)
                        bad.append((a, n1, n2))
                    except DpfibError:
                        rejected += 1
    return not bad, f"{count} models with 2a+b>=3 rigid, {rejected} rejected, bad={bad[:5]}"


def check_reductions(budget: int, seed: int) -> tuple[bool, str]:
    out = []
    expected = {
        "dp1-eps-pos": ("2*n2-3*n1-5", True),
        "dp1-eps-zero": ("2*n2-5", False),
        "dp1-eps-zero-A": ("A", True),
        "dp2": ("(2-beta)*n**2", False),
    }
    ok = True
    for case, (text, infeasible) in expected.items():
        lhs, rhs = nf.certificate_identity(case)
        cert = nf.reduce_to_quadratic(case)
        good = (lhs - rhs).is_zero() and cert.coefficient_text == text and cert.infeasible == infeasible
        ok &= good
        out.append(f"{case}:{'ok' if good else 'BAD'}")
    # instances
    ok &= nf.reduce_to_quadratic("dp2", {"beta": 2}).infeasible is True
    ok &= nf.reduce_to_quadratic("dp1-eps-zero", {"n2": 3}).infeasible is True
    for n2 in (1, 2):
        system = nf.nf_system("dp1-eps-zero", 1, n2=n2)
        res = nf.feasibility_search(system, nf.SearchBox(n_values=tuple(range(1, 51))), budget, seed)
        found = res.found and nf.check_witness(res.system, res.witness)
        ok &= found
        out.append(f"n2={n2} witness after {res.samples}")
    res = nf.feasibility_search(nf.nf_system("dp2", 1, beta=2), budget=2000, seed=seed)
    ok &= not res.found
    return ok, ", ".join(out)


def check_thresholds_0012() -> tuple[bool, str]:
    m = models.build_dp1(0, 0, 1, 2)
    r = cones.thresholds(m, DivisorClassV(2, -2))
    return r.mu == 2 and r.alpha == 1 and not r.equal, f"mu={r.mu} alpha={r.alpha}"


def _k2_brute(model, grid: int = 100) -> bool:
    # no a K^2 - b f with 0 < a, b <= grid is effective (curve cone = <s0, f>)
    ksq = models.anti_k_square(model)
    d, y = int(ksq.s0), int(ksq.f)
    assert d == ksq.s0 and y == ksq.f
    return not any(a * d >= 0 and a * y - b >= 0
                   for a in range(1, grid + 1) for b in range(1, grid + 1))


def _k2_closed_form(model) -> bool:
    if model.degree == 2:
        return model.beta <= 0
    if model.epsilon == 0:
        return model.n2 >= 4
    return model.n2 >= 4 + Fraction(3, 2) * model.n1


def check_k2(max_n3: int, box: Dp2Box) -> tuple[bool, str]:
    ms = models.enumerate_models(1, max_n3) + models.enumerate_models(2, box)
    bad = [m for m in ms
           if not (_k2_brute(m) == _k2_closed_form(m) == cones.k2_condition(m))]
    return not bad, f"{len(ms)} models, mismatches {[str(m) for m in bad[:5]]}"


def check_iskovskikh_eps_zero(max_n3: int) -> tuple[bool, str]:
    ms = [m for m in models.enumerate_models(1, max_n3) if m.epsilon == 0]
    bad = [m for m in ms if (cones.iskovskikh_value(m) <= 2) != (m.n2 >= 3)
           or cones.iskovskikh_value(m) != 5 - m.n2]
    return not bad, f"{len(ms)} models"


def iskovskikh_eps_pos_note() -> Check:
    ms = [m for m in models.enumerate_models(1, 80) if m.epsilon > 0 and m.n2 <= 40]
    computed = all(m.n2 >= 3 + Fraction(3, 2) * m.n1 for m in ms)
    stated = all(m.n2 >= 2 + Fraction(3, 2) * m.n1 for m in ms)
    agree = all((cones.iskovskikh_value(m) <= 2) == (m.n2 >= 3 + Fraction(3, 2) * m.n1) for m in ms)
    detail = (f"computed value 5+3n1/2-n2 gives n2 >= 3+3n1/2, not the weaker n2 >= 2+3n1/2; "
              f"both hold on all {len(ms)} valid models with n2 <= 40")
    check = Check("Iskovskikh EpsPos threshold", computed and stated and agree, detail)
    check.note = check.passed
    return check


def check_chow_properties(cases: int, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    for i in range(cases):
        r = rng.randint(2, 5)
        X = chow.make_bundle(r, [rng.randint(-3, 6) for _ in range(r)])
        M, L = X.M, X.L

        def rand_class(codim):
            if codim == 0:
                return X.one * rng.randint(-5, 5)
            return chow.ChowClass(X, codim, rng.randint(-5, 5), rng.randint(-5, 5))

        p, q = rng.randint(0, r), rng.randint(0, r)
        s = rng.randint(0, max(0, r - p - q))
        A, B, C = rand_class(p), rand_class(q), rand_class(s)
        if (A * B) * C != A * (B * C):
            return False, f"associativity fails on case {i}"
        if (A * B) != (B * A):
            return False, f"commutativity fails on case {i}"
        if (M ** r).degree() != X.b or (M ** (r - 1) * L).degree() != 1:
            return False, f"top degrees wrong on case {i}"
        if not (chow.pair(M, X.t0) == 0 and chow.pair(M, X.l) == 1
                and chow.pair(L, X.t0) == 1 and chow.pair(L, X.l) == 0):
            return False, f"duality fails on case {i}"
        D = X.divisor(rng.randint(-5, 5), rng.randint(-5, 5))
        curve = rand_class(r - 1)
        if chow.pair(D, chow.curve_convert(curve)) != (D * curve).degree():
            return False, f"pairing disagrees with product on case {i}"
    return True, f"{cases} cases"


def check_dp2_cube(box: Dp2Box) -> tuple[bool, str]:
    ms = models.enumerate_models(2, box)
    bad = [m for m in ms
           if not (models.anti_k_cube(m) == 12 - 6 * m.a - 4 * m.b
                   == models.anti_k_cube_from_triple_products(m))]
    return not bad, f"{len(ms)} models"


def check_double_cover(max_n3: int, box: Dp2Box) -> tuple[bool, str]:
    ms = models.enumerate_models(1, max_n3) + models.enumerate_models(2, box)
    bad = []
    for m in ms:
        t, c = models.intersection_table(m), models.table_via_double_cover(m)
        if (t.anti_k_cube, t.anti_k_square, t.anti_k_s0, t.anti_k_f, t.F_s0, t.F_f) != (
                c.anti_k_cube, c.anti_k_square, c.anti_k_s0, c.anti_k_f, c.F_s0, c.F_f):
            bad.append(str(m))
    return not bad, f"{len(ms)} models, mismatches {bad[:5]}"


def _struct_predicate(e, n1, n2, n3) -> bool:
    if not 0 <= n1 <= n2 <= n3 or n1 + n2 + n3 == 0:
        return False
    if e == 0:
        return n1 % 2 == 0 and n3 % 2 == 0 and n1 + n3 == 2 * n2
    return e == n1 and n1 % 2 == 0 and n3 == 2 * n2 and n2 >= 3 * n1


def check_struct_oracle(max_n3: int) -> tuple[bool, str]:
    brute = sorted((e, n1, n2, n3)
                   for n3 in range(max_n3 + 1) for n2 in range(n3 + 1)
                   for n1 in range(n2 + 1) for e in range(n3 + 1)
                   if _struct_predicate(e, n1, n2, n3))
    got = [m.params for m in models.enumerate_models(1, max_n3)]
    return brute == got, f"{len(got)} models"


def check_restriction(max_n3: int) -> tuple[bool, str]:
    bad = []
    for m in models.enumerate_models(1, max_n3):
        G = models.g_divisor(m)
        for n in range(0, 4):
            for f in range(-6, 7):
                D = DivisorClassV(n, f)
                r = models.restrict_to_G(m, D)
                cls = models.intersect(m, D, G)
                if (r.section, r.fiber) != (cls.s0, cls.f):
                    bad.append((m.params, n, f))
    return not bad, f"bad={bad[:3]}"


def check_construction(max_n3: int) -> tuple[bool, str]:
    count = 0
    for m in models.enumerate_models(1, max_n3):
        for beta_h in range(1, 6):
            models.construction_identities_dp1(m, beta_h)
            count += 1
    return True, f"{count} (model, beta_H) pairs"


def check_flop(n_max: int = 100) -> tuple[bool, str]:
    T = models.flop_transform_222()
    if T.compose(T).matrix != ((1, 0), (0, 1)):
        return False, "not an involution"
    if T.apply(ANTI_K) != ANTI_K or T.apply(FIBER) != ANTI_K - FIBER:
        return False, "wrong images of -K, F"
    for n in range(n_max + 1):
        for l in range(n + 1):  # noqa: E741
            if T.apply(DivisorClassV(n, -l)) != DivisorClassV(n - l, l):
                return False, f"fails at n={n}, l={l}"
    return True, f"0 <= l <= n <= {n_max}"


def check_flop_thresholds(n_max: int) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        missed = nf.flop_exclusion_thresholds(n, "FiberMissed")
        met = nf.flop_exclusion_thresholds(n, "FiberMet")
        if missed != Fraction(n - 2, 2 * n) or met != Fraction(n - 8, 8 * n):
            return False, f"closed form differs at n={n}"
        if nf.combined_flop_threshold(n) != met or met > missed:
            return False, f"combined bound wrong at n={n}"
    # each certificate proves at least the stated bound
    for n in (1, 2, 3, 8, 50, 1000):
        for branch in nf.FlopBranch:
            if nf.certified_flop_threshold(n, branch) < nf.flop_exclusion_thresholds(n, branch):
                return False, f"certificate weaker than stated bound at n={n}, {branch.value}"
    big = 10 ** 6
    gap_missed = Fraction(1, 2) - nf.flop_exclusion_thresholds(big, "FiberMissed")
    gap_met = Fraction(1, 8) - nf.flop_exclusion_thresholds(big, "FiberMet")
    if gap_missed != Fraction(1, big) or gap_met != Fraction(1, big):
        return False, "limit check failed"
    if not nf.flop_exclusion_thresholds(big, "FiberMet") > 0:
        return False, "threshold not positive at n = 10^6"
    return True, f"1 <= n <= {n_max}, limit at n = 10^6"


# ---------------------------------------------------------------------------


def verify_all(box: VerifyBox | None = None) -> Report:
    box = box or VerifyBox()
    dp2_box = Dp2Box(box.dp2_a, box.dp2_n2)
    plan: Iterable[tuple[str, Callable[[], tuple[bool, str]], float | None]] = [
        ("lem_17 golden list", check_golden_lists, 1.0),
        ("dp1_cor classification", lambda: check_dp1_classification(box.dp1_n3), 5.0),
        ("dp2_th rigidity", lambda: check_dp2_rigidity(dp2_box), None),
        ("reduction certificates", lambda: check_reductions(box.witness_budget, box.seed), None),
        ("thresholds (0;0,1,2)", check_thresholds_0012, None),
        ("K^2-condition closed forms", lambda: check_k2(box.dp1_n3, dp2_box), None),
        ("Iskovskikh EpsZero", lambda: check_iskovskikh_eps_zero(box.dp1_n3), None),
        ("dp2 (-K)^3 identity", lambda: check_dp2_cube(dp2_box), None),
        ("chow property suite", lambda: check_chow_properties(box.chow_cases, box.seed), None),
        ("prop_flop lattice map", check_flop, None),
        ("flop exclusion thresholds", lambda: check_flop_thresholds(box.flop_n), None),
        ("struct_lemma oracle equivalence", lambda: check_struct_oracle(min(box.dp1_n3, 20)), None),
        ("double-cover cross-check", lambda: check_double_cover(box.dp1_n3, dp2_box), None),
        ("restriction to G_V", lambda: check_restriction(min(box.dp1_n3, 20)), None),
        ("construction identities", lambda: check_construction(box.dp1_n3), None),
    ]
    report = Report()
    for name, fn, limit in plan:
        report.checks.append(_timed(name, fn, limit))
    report.checks.append(iskovskikh_eps_pos_note())
    return report
