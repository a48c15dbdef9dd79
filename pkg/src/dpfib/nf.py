"""Quadratic inequalities coming from a supermaximal singularity.

A maximal singularity of a mobile system ``D`` in ``|n(-K) + mF|`` over a point
``B_0`` produces positive weights ``S0 >= S0' > 0``, ``S1 > 0`` and an excess
``e > 0`` with::

    (S0 + S1) (m_h S0 + m_v S0') > (2n S0 + n S1 + e)^2          (*)

where ``m_h``, ``m_v`` are the multiplicities at ``B_0`` of the horizontal and
vertical parts of ``D_1 . D_2``.  Each geometric situation caps them::

    m_h <= horizontal_cap
    m_v S0' < (c0 n^2 + offset) S0 + c1 n e

Substituting the caps into (*) and completing the square gives::

    coefficient * S0 (S0 + S1) + (n S1 - e)^2 + slack < 0

with ``slack >= 0``; a non-negative coefficient makes the configuration
impossible.  :func:`reduce_to_quadratic` checks this rearrangement as an exact
polynomial identity.  :func:`feasibility_search` looks for explicit rational
witnesses of (*) and is only ever a bounded search.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Mapping

from .errors import InvalidArgument
from .poly import Poly

TWO_BLOWUP_CAP = "twoBlowupCap"
HALF_SIGMA = "halfSigma"
HORIZONTAL_CLASS_A = "horizontalClassA"

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class _Case:
    name: str
    params: tuple[str, ...]
    horizontal: Callable[[Mapping[str, Any]], Any]
    c0: Callable[[Mapping[str, Any]], Any]
    offset: Callable[[Mapping[str, Any]], Any]
    c1: int
    coefficient: Callable[[Mapping[str, Any]], Any]
    coefficient_text: str
    scale: Callable[[Mapping[str, Any]], Any]
    slack: Callable[[Mapping[str, Any], Any, Any, Any], Any] | None = None
    extra: frozenset = frozenset()
    # coefficient >= 0 on every admissible parameter value
    infeasible_everywhere: bool = False


def _zero(p):
    return 0


def _one(p):
    return 1


def _n2(p):
    return p["n"] ** 2


CASES: dict[str, _Case] = {
    # degree 1, epsilon = n1 > 0: m_h <= n^2, m_v <= 2 deg Z_v
    "dp1-eps-pos": _Case(
        name="dp1-eps-pos",
        params=("n1", "n2"),
        horizontal=_n2,
        c0=lambda p: 8 + 3 * p["n1"] - 2 * p["n2"],
        offset=_zero,
        c1=4,
        coefficient=lambda p: 2 * p["n2"] - 3 * p["n1"] - 5,
        coefficient_text="2*n2-3*n1-5",
        scale=_n2,
        infeasible_everywhere=True,
    ),
    "dp1-eps-zero": _Case(
        name="dp1-eps-zero",
        params=("n2",),
        horizontal=_n2,
        c0=lambda p: 8 - 2 * p["n2"],
        offset=_zero,
        c1=4,
        coefficient=lambda p: 2 * p["n2"] - 5,
        coefficient_text="2*n2-5",
        scale=_n2,
    ),
    # n2 = 2, no s_0-section through B_0; A = s_0-degree of horizontal cycles there
    "dp1-eps-zero-A": _Case(
        name="dp1-eps-zero-A",
        params=("A",),
        horizontal=lambda p: p["A"],
        c0=lambda p: 4,
        offset=lambda p: -2 * p["A"],
        c1=4,
        coefficient=lambda p: p["A"],
        coefficient_text="A",
        scale=_one,
        extra=frozenset({HORIZONTAL_CLASS_A}),
        infeasible_everywhere=True,
    ),
    # degree 2: m_h <= 2n^2, m_v <= deg Z_v < beta n^2 + 4ne
    "dp2": _Case(
        name="dp2",
        params=("beta",),
        horizontal=lambda p: 2 * p["n"] ** 2,
        c0=lambda p: p["beta"],
        offset=_zero,
        c1=4,
        coefficient=lambda p: (2 - p["beta"]) * p["n"] ** 2,
        coefficient_text="(2-beta)*n**2",
        scale=_one,
    ),
    # flop target with nef -K_W; mp = m' of the very ample system on W
    "flop-fiber-missed": _Case(
        name="flop-fiber-missed",
        params=("A", "mp"),
        horizontal=lambda p: p["A"],
        c0=lambda p: 2,
        offset=lambda p: 2 * p["mp"] * p["n"] + 2 * p["n"] - p["A"],
        c1=2,
        coefficient=lambda p: 2 * p["n"] * (p["n"] - p["mp"] - 1),
        coefficient_text="2*n*(n-mp-1)",
        scale=_one,
        slack=lambda p, s0, s1, e: 2 * p["n"] * e * (s0 + s1),
        extra=frozenset({HALF_SIGMA, HORIZONTAL_CLASS_A}),
    ),
    "flop-fiber-met": _Case(
        name="flop-fiber-met",
        params=("A", "mp"),
        horizontal=lambda p: p["A"],
        c0=lambda p: 4,
        offset=lambda p: 4 * p["mp"] * p["n"] + 4 * p["n"] - 2 * p["A"],
        c1=4,
        coefficient=lambda p: p["A"] - 4 * p["mp"] * p["n"] - 4 * p["n"],
        coefficient_text="A-4*mp*n-4*n",
        scale=_one,
        extra=frozenset({TWO_BLOWUP_CAP, HORIZONTAL_CLASS_A}),
    ),
}

REDUCTION_CASES = ("dp1-eps-pos", "dp1-eps-zero", "dp1-eps-zero-A", "dp2")


def _case(name: str) -> _Case:
    try:
        return CASES[name]
    except KeyError:
        raise InvalidArgument(f"unknown case {name!r}; expected one of {sorted(CASES)}") from None


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class NFSystem:
    """One instance of (*) with numeric caps."""

    n: int
    horizontal_cap: Fraction
    vertical_cap: tuple[Fraction, Fraction]  # (c0, c1)
    vertical_offset: Fraction = Fraction(0)
    extra: frozenset = frozenset()
    case: str | None = None
    params: tuple = ()

    def weighted_vertical_cap(self, s0: Fraction, e: Fraction) -> Fraction:
        c0, c1 = self.vertical_cap
        return (c0 * self.n ** 2 + self.vertical_offset) * s0 + c1 * self.n * e

    def with_n(self, n: int) -> "NFSystem":
        if self.case is not None:
            return nf_system(self.case, n, **dict(self.params))
        return replace(self, n=n)

    def quadratic_coefficient(self) -> Fraction:
        """Coefficient of ``S0 (S0 + S1)`` after substituting the caps.

        Valid when ``c1 = 4``; for other ``c1`` the leftover ``e``-term is
        not absorbed and this returns the coefficient of the remaining part.
        """
        c0, _ = self.vertical_cap
        return 4 * self.n ** 2 - self.horizontal_cap - c0 * self.n ** 2 - self.vertical_offset


def nf_system(case: str, n: int, **params) -> NFSystem:
    """Numeric system for ``case`` at system degree ``n``."""
    spec = _case(case)
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    missing = set(spec.params) - set(params)
    unknown = set(params) - set(spec.params)
    if missing or unknown:
        raise InvalidArgument(f"case {case} takes parameters {spec.params}, got {sorted(params)}")
    p = {k: Fraction(v) for k, v in params.items()}
    if HORIZONTAL_CLASS_A in spec.extra and p["A"] < 0:
        raise InvalidArgument("A must be non-negative")
    if case == "dp2" and p["beta"] <= 0:
        # for beta <= 0 only deg Z_v < 4ne is available
        cap_p = dict(p, beta=Fraction(0))
    else:
        cap_p = dict(p)
    cap_p["n"] = Fraction(n)
    return NFSystem(
        n=int(n),
        horizontal_cap=Fraction(spec.horizontal(cap_p)),
        vertical_cap=(Fraction(spec.c0(cap_p)), Fraction(spec.c1)),
        vertical_offset=Fraction(spec.offset(cap_p)),
        extra=spec.extra,
        case=case,
        params=tuple(sorted(p.items())),
    )


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class ReductionCertificate:
    case: str
    coefficient: Poly
    coefficient_text: str
    scale: Poly
    residual: Poly  # (n S1 - e)^2
    identity_verified: bool
    infeasible: bool | None
    value: Fraction | None = None  # coefficient * scale at the given parameters

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "coefficient": self.coefficient_text,
            "identity_verified": self.identity_verified,
            "infeasible": self.infeasible,
            "value": None if self.value is None else str(self.value),
        }


def _symbols(spec: _Case) -> dict[str, Poly]:
    names = ("n", "S0", "S0p", "S1", "e") + spec.params
    return {v: Poly.var(v) for v in names}


def certificate_identity(case: str) -> tuple[Poly, Poly]:
    """Both sides of the certificate identity as expanded polynomials.

    Left: ``(2n S0 + n S1 + e)^2 - (S0 + S1)(h S0 + W)`` with the caps
    substituted (``W`` the weighted vertical cap).  Right:
    ``coefficient*scale*S0(S0+S1) + (n S1 - e)^2 + slack``.
    """
    spec = _case(case)
    x = _symbols(spec)
    n, s0, s1, e = x["n"], x["S0"], x["S1"], x["e"]
    h = spec.horizontal(x)
    w = (spec.c0(x) * n ** 2 + spec.offset(x)) * s0 + spec.c1 * n * e
    lhs = (2 * n * s0 + n * s1 + e) ** 2 - (s0 + s1) * (h * s0 + w)
    rhs = spec.coefficient(x) * spec.scale(x) * s0 * (s0 + s1) + (n * s1 - e) ** 2
    if spec.slack is not None:
        rhs = rhs + spec.slack(x, s0, s1, e)
    return lhs, rhs


def effective_coefficient(system: NFSystem) -> Fraction:
    """Coefficient that decides infeasibility of a numeric system."""
    spec = _case(system.case)
    p = dict(system.params)
    if system.case == "dp2" and p["beta"] <= 0:
        p["beta"] = Fraction(0)
    p["n"] = Fraction(system.n)
    value = Fraction(spec.coefficient(p) * spec.scale(p))
    if TWO_BLOWUP_CAP in spec.extra:
        # (n S1 - e)^2 >= n^2/2 S0 (S0 + S1)
        value += HALF * system.n ** 2
    return value


def reduce_to_quadratic(case: str, params: Mapping[str, Any] | None = None) -> ReductionCertificate:
    """Certificate for ``case``.

    Without ``params`` the certificate is symbolic and ``infeasible`` states
    whether the coefficient is non-negative on every admissible parameter
    value (``False`` when it depends on them).  With ``params`` (and
    optionally ``n``, default 1) it is evaluated at that instance.
    """
    spec = _case(case)
    lhs, rhs = certificate_identity(case)
    verified = (lhs - rhs).is_zero()
    if not verified:
        raise RuntimeError(f"certificate identity fails for {case}: {lhs - rhs}")
    x = _symbols(spec)
    coefficient = Poly._lift(spec.coefficient(x))
    scale = Poly._lift(spec.scale(x))
    residual = (x["n"] * x["S1"] - x["e"]) ** 2
    value = None
    if params is None:
        infeasible = spec.infeasible_everywhere
    else:
        params = dict(params)
        n = params.pop("n", 1)
        system = nf_system(case, n, **params)
        value = effective_coefficient(system)
        infeasible = value >= 0
    return ReductionCertificate(
        case=case,
        coefficient=coefficient,
        coefficient_text=spec.coefficient_text,
        scale=scale,
        residual=residual,
        identity_verified=verified,
        infeasible=infeasible,
        value=value,
    )


# ---------------------------------------------------------------------------
# witnesses


WITNESS_KEYS = ("n", "sigma0", "sigma0_prime", "sigma1", "e", "m_h", "m_v")


def target_lhs_rhs(w: Mapping[str, Fraction]) -> tuple[Fraction, Fraction]:
    lhs = (w["sigma0"] + w["sigma1"]) * (w["m_h"] * w["sigma0"] + w["m_v"] * w["sigma0_prime"])
    rhs = (2 * w["n"] * w["sigma0"] + w["n"] * w["sigma1"] + w["e"]) ** 2
    return lhs, rhs


def check_witness(system: NFSystem, w: Mapping[str, Fraction]) -> bool:
    """Exact check of every constraint and the strict target inequality."""
    w = {k: Fraction(w[k]) for k in WITNESS_KEYS}
    n = w["n"]
    s0, s0p, s1, e = w["sigma0"], w["sigma0_prime"], w["sigma1"], w["e"]
    if n != system.n:
        return False
    if not (s0 >= s0p > 0 and s1 > 0 and e > 0):
        return False
    if HALF_SIGMA in system.extra and not s0p <= s0 / 2:
        return False
    if not 0 <= w["m_h"] <= system.horizontal_cap:
        return False
    if not (w["m_v"] >= 0 and w["m_v"] * s0p < system.weighted_vertical_cap(s0, e)):
        return False
    if TWO_BLOWUP_CAP in system.extra and (n * s1 - e) ** 2 < HALF * n ** 2 * s0 * (s0 + s1):
        return False
    lhs, rhs = target_lhs_rhs(w)
    return lhs > rhs


@dataclass(frozen=True)
class SearchBox:
    """Sampling ranges: ``S0, S1 in (0, sigma_max]``, ``e in (0, e_max_per_n * n]``."""

    sigma_max: Fraction = Fraction(10)
    e_max_per_n: Fraction = Fraction(5)
    n_values: tuple[int, ...] | None = None
    denominator: int = 64


@dataclass(frozen=True)
class SearchResult:
    witness: dict | None
    samples: int
    seed: int
    system: NFSystem = field(repr=False)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict:
        wit = None if self.witness is None else {k: str(v) for k, v in self.witness.items()}
        return {"witness": wit, "samples": self.samples, "seed": self.seed}


_GEOMETRIC_STEPS = 12


def _sample(rng: random.Random, top: Fraction, den: int, geometric: bool) -> Fraction:
    if geometric:
        return top / 2 ** rng.randrange(_GEOMETRIC_STEPS)
    return top * Fraction(rng.randint(1, den), den)


def feasibility_search(system: NFSystem, box: SearchBox | None = None,
                       budget: int = 10_000, seed: int = 0) -> SearchResult:
    """Random search for a rational witness of (*).

    ``m_h`` is set to its cap and ``m_v`` just below its cap (both only
    enlarge the left side).  Samples alternate between a geometric grid and
    uniform rationals with denominator ``box.denominator``.  Returns the
    first witness found; ``witness is None`` only means none was found.
    """
    box = box or SearchBox()
    if budget < 1:
        raise InvalidArgument("budget must be >= 1")
    sigma_max, e_max = Fraction(box.sigma_max), Fraction(box.e_max_per_n)
    n_values = box.n_values or (system.n,)
    if sigma_max <= 0 or e_max <= 0 or not n_values or min(n_values) < 1 or box.denominator < 1:
        raise InvalidArgument(f"empty search box {box}")
    systems = [system.with_n(n) if n != system.n else system for n in n_values]
    rng = random.Random(seed)
    den = box.denominator
    lam = 1 - Fraction(1, den)
    for i in range(budget):
        sys_i = systems[i % len(systems)]
        geo = bool(i & 1)
        n = Fraction(sys_i.n)
        s0 = _sample(rng, sigma_max, den, geo)
        ratio = _sample(rng, Fraction(1), den, geo)
        if HALF_SIGMA in sys_i.extra:
            ratio /= 2
        s0p = s0 * ratio
        s1 = _sample(rng, sigma_max, den, geo)
        e = _sample(rng, e_max * n, den, geo)
        m_h = sys_i.horizontal_cap
        cap = sys_i.weighted_vertical_cap(s0, e)
        if m_h < 0 or cap <= 0:
            continue
        w = {
            "n": n, "sigma0": s0, "sigma0_prime": s0p, "sigma1": s1, "e": e,
            "m_h": m_h, "m_v": lam * cap / s0p,
        }
        if check_witness(sys_i, w):
            return SearchResult(w, i + 1, seed, sys_i)
    return SearchResult(None, budget, seed, system)


# ---------------------------------------------------------------------------
# flop exclusion


class FlopBranch(str, enum.Enum):
    FIBER_MISSED = "FiberMissed"  # second centre misses the fiber's strict transform
    FIBER_MET = "FiberMet"


_FLOP_CASE = {FlopBranch.FIBER_MISSED: "flop-fiber-missed", FlopBranch.FIBER_MET: "flop-fiber-met"}
_FLOP_CONST = {FlopBranch.FIBER_MISSED: HALF, FlopBranch.FIBER_MET: Fraction(1, 8)}


def flop_exclusion_thresholds(n: int, branch: FlopBranch | str) -> Fraction:
    """Lower bound on ``m'/n`` forced by a maximal singularity on a branch.

    ``1/2 - 1/n`` when the second centre misses the fiber, ``1/8 - 1/n``
    when it meets it.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    return _FLOP_CONST[FlopBranch(branch)] - Fraction(1, n)


def combined_flop_threshold(n: int) -> Fraction:
    return min(flop_exclusion_thresholds(n, b) for b in FlopBranch)


def certified_flop_threshold(n: int, branch: FlopBranch | str, A: Fraction = Fraction(0)) -> Fraction:
    """Largest ``m'/n`` for which the branch certificate proves infeasibility.

    The effective coefficient is affine in ``m'``; solved exactly.
    """
    case = _FLOP_CASE[FlopBranch(branch)]
    c0 = effective_coefficient(nf_system(case, n, A=A, mp=0))
    c1 = effective_coefficient(nf_system(case, n, A=A, mp=1))
    slope = c1 - c0
    # c0 + slope * mp >= 0  <=>  mp <= -c0 / slope   (slope < 0)
    return -c0 / slope / n
