"""Parameter models for smooth del Pezzo fibrations of degree 1 and 2 over P^1.

A degree-1 fibration ``V`` is described by ``(epsilon; n1, n2, n3)``: the
splitting type of ``rho_* O(-2K_V + mF) = O + O(n1) + O(n2) + O(n3)`` and the
twist ``epsilon`` of the special section ``t_B = t_0 + epsilon*l``.  ``V`` is a
double cover of a quadric-cone bundle ``Q`` in ``X = P(E)`` branched in a cubic
section ``R``.

A degree-2 fibration is described by ``(a; n1, n2)``: ``V`` is a double cover
of ``X = P(O + O(n1) + O(n2))`` branched in ``R ~ 4M + 2aL``.

Divisors on ``V`` are written in the basis ``(-K_V, F)`` and curves in the
basis ``(s_0, f)``; both cones of curves are spanned by ``s_0`` and ``f``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple, Union

from . import chow
from .errors import InvalidArgument, NotApplicable, NotRealizable, ProductCase

Number = Union[int, Fraction]

HALF = Fraction(1, 2)


class CaseTag(str, enum.Enum):
    EPS_ZERO = "EpsZero"
    EPS_POS = "EpsPos"


def _int(name, value):
    if isinstance(value, bool) or int(value) != value:
        raise InvalidArgument(f"{name} must be an integer, got {value!r}")
    return int(value)


# ---------------------------------------------------------------------------
# lattice classes on V


@dataclass(frozen=True)
class DivisorClassV:
    """``k * (-K_V) + f * F``."""

    k: Fraction = Fraction(0)
    f: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        object.__setattr__(self, "f", Fraction(self.f))

    def __add__(self, other):
        return DivisorClassV(self.k + other.k, self.f + other.f)

    def __sub__(self, other):
        return DivisorClassV(self.k - other.k, self.f - other.f)

    def __neg__(self):
        return DivisorClassV(-self.k, -self.f)

    def __mul__(self, c):
        return DivisorClassV(self.k * c, self.f * c)

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.k}(-K) + {self.f}F"


ANTI_K = DivisorClassV(1, 0)
FIBER = DivisorClassV(0, 1)


@dataclass(frozen=True)
class CurveClassV:
    """``s0 * s_0 + f * f``."""

    s0: Fraction = Fraction(0)
    f: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "s0", Fraction(self.s0))
        object.__setattr__(self, "f", Fraction(self.f))

    def __add__(self, other):
        return CurveClassV(self.s0 + other.s0, self.f + other.f)

    def __sub__(self, other):
        return CurveClassV(self.s0 - other.s0, self.f - other.f)

    def __mul__(self, c):
        return CurveClassV(self.s0 * c, self.f * c)

    __rmul__ = __mul__

    def is_effective(self) -> bool:
        return self.s0 >= 0 and self.f >= 0

    def __str__(self):
        return f"{self.s0}s0 + {self.f}f"


S0 = CurveClassV(1, 0)
F_CURVE = CurveClassV(0, 1)


# ---------------------------------------------------------------------------
# models


@dataclass(frozen=True)
class DegreeOneModel:
    epsilon: int
    n1: int
    n2: int
    n3: int
    degree: int = field(default=1, init=False)

    def __post_init__(self):
        for name in ("epsilon", "n1", "n2", "n3"):
            object.__setattr__(self, name, _int(name, getattr(self, name)))
        e, n1, n2, n3 = self.epsilon, self.n1, self.n2, self.n3
        if not 0 <= n1 <= n2 <= n3:
            raise InvalidArgument(f"need 0 <= n1 <= n2 <= n3, got {n1}, {n2}, {n3}")
        if e < 0:
            raise InvalidArgument(f"epsilon must be >= 0, got {e}")
        if n1 + n2 + n3 == 0:
            raise ProductCase("b = 0: V is P^1 x S, not a Mori fibration")
        if e == 0:
            if 2 * n2 != n1 + n3:
                raise NotRealizable("2*n2 = n1 + n3")
            if n1 % 2:
                raise NotRealizable("n1 even")
            if n3 % 2:
                raise NotRealizable("n3 even")
        else:
            if e != n1:
                raise NotRealizable("epsilon = n1")
            if n3 != 2 * n2:
                raise NotRealizable("n3 = 2*n2")
            if n1 % 2:
                raise NotRealizable("n1 even")
            if n2 < 3 * n1:
                raise NotRealizable("n2 >= 3*n1")
        if (e - self.b) % 3:
            # unreachable under the clauses above
            raise NotRealizable("a' = (epsilon - b)/3 integral")

    @property
    def params(self) -> tuple[int, ...]:
        return (self.epsilon, self.n1, self.n2, self.n3)

    @property
    def case_tag(self) -> CaseTag:
        return CaseTag.EPS_ZERO if self.epsilon == 0 else CaseTag.EPS_POS

    @property
    def b(self) -> int:
        return self.n1 + self.n2 + self.n3

    @property
    def a_prime(self) -> int:
        return (self.epsilon - self.b) // 3

    @property
    def a(self) -> int:
        """L-coefficient of ``Q ~ 2M + aL``."""
        return 2 * self.a_prime

    @property
    def q_coeff(self) -> Fraction:
        return Fraction(-2, 3) * (self.b - self.epsilon)

    @property
    def r_coeff(self) -> int:
        return -3 * self.epsilon

    @property
    def bundle(self) -> chow.BundleSpec:
        return chow.make_bundle(4, [0, self.n1, self.n2, self.n3])

    def to_json(self) -> dict:
        return {"degree": 1, "epsilon": self.epsilon, "n": [self.n1, self.n2, self.n3]}

    def __str__(self):
        return f"dP1({self.epsilon}; {self.n1},{self.n2},{self.n3})"


@dataclass(frozen=True)
class DegreeTwoModel:
    a: int
    n1: int
    n2: int
    degree: int = field(default=2, init=False)

    def __post_init__(self):
        for name in ("a", "n1", "n2"):
            object.__setattr__(self, name, _int(name, getattr(self, name)))
        a, n1, n2 = self.a, self.n1, self.n2
        if not 0 <= n1 <= n2:
            raise InvalidArgument(f"need 0 <= n1 <= n2, got {n1}, {n2}")
        s = self.sum2ab
        if s <= 0:
            raise NotRealizable("2a + b >= 1")
        if s <= 2 and a < 0:
            # R.t_0 = 2a < 0 puts every s_0-curve inside R
            if n1 == 0:
                raise NotRealizable("n1 > 0 when a < 0 (R irreducible)")
            # restriction of R to the blow-up of t_0 is t_E + (2a+n2) l_E on F_(n2-n1)
            if not (2 * a + n2 == 0 or 2 * a + n2 >= n2 - n1):
                raise NotRealizable("t_E + (2a+n2) l_E irreducible")
            if 4 * n1 + 2 * a < 0:
                raise NotRealizable("R.(t_0 + n1 l) = 4*n1 + 2a >= 0")

    @property
    def params(self) -> tuple[int, ...]:
        return (self.a, self.n1, self.n2)

    @property
    def b(self) -> int:
        return self.n1 + self.n2

    @property
    def sum2ab(self) -> int:
        return 2 * self.a + self.b

    @property
    def beta(self) -> int:
        """f-coefficient of ``K_V^2 = 2 s_0 + beta f``."""
        return 8 - 4 * self.a - 2 * self.b

    @property
    def existence_verified(self) -> bool:
        # only 2a+b in {1, 2} is checked against smoothness of R
        return self.sum2ab <= 2

    @property
    def bundle(self) -> chow.BundleSpec:
        return chow.make_bundle(3, [0, self.n1, self.n2])

    def to_json(self) -> dict:
        return {"degree": 2, "a": self.a, "n": [self.n1, self.n2]}

    def __str__(self):
        return f"dP2({self.a}; {self.n1},{self.n2})"


Model = Union[DegreeOneModel, DegreeTwoModel]


def build_dp1(epsilon: int, n1: int, n2: int, n3: int) -> DegreeOneModel:
    return DegreeOneModel(epsilon, n1, n2, n3)


def build_dp2(a: int, n1: int, n2: int) -> DegreeTwoModel:
    return DegreeTwoModel(a, n1, n2)


def build_model(degree: int, params) -> Model:
    params = list(params)
    if degree == 1:
        if len(params) != 4:
            raise InvalidArgument("degree 1 takes epsilon,n1,n2,n3")
        return build_dp1(*params)
    if degree == 2:
        if len(params) != 3:
            raise InvalidArgument("degree 2 takes a,n1,n2")
        return build_dp2(*params)
    raise InvalidArgument(f"degree must be 1 or 2, got {degree}")


def model_from_json(obj: dict) -> Model:
    try:
        degree = obj["degree"]
        n = list(obj["n"])
        if degree == 1:
            return build_dp1(obj["epsilon"], *n)
        if degree == 2:
            return build_dp2(obj["a"], *n)
    except (KeyError, TypeError) as exc:
        raise InvalidArgument(f"malformed model object: {obj!r}") from exc
    raise InvalidArgument(f"degree must be 1 or 2, got {degree!r}")


# ---------------------------------------------------------------------------
# branch data on X


class BranchData(NamedTuple):
    Q: chow.ChowClass
    tB: chow.CurveClassX
    R: chow.ChowClass


def branch_data_dp1(model: DegreeOneModel) -> BranchData:
    """Classes of the quadric bundle, special section and branch divisor."""
    if model.degree != 1:
        raise NotApplicable("branch data is defined for degree 1 models")
    X = model.bundle
    e = model.epsilon
    return BranchData(
        Q=X.divisor(2, model.q_coeff),
        tB=X.curve(1, e),
        R=X.divisor(3, -3 * e),
    )


# ---------------------------------------------------------------------------
# intersection theory on V


def _anti_k_dot_s0(model: Model) -> Fraction:
    if model.degree == 2:
        return Fraction(2 - model.a - model.b)
    if model.epsilon == 0:
        return Fraction(2 - model.n2)
    return 2 + HALF * model.n1 - model.n2


def _ksq_f(model: Model) -> Fraction:
    if model.degree == 2:
        return Fraction(model.beta)
    if model.epsilon == 0:
        return Fraction(4 - model.n2)
    return 4 + Fraction(3, 2) * model.n1 - model.n2


def pair(model: Model, D: DivisorClassV, C: CurveClassV) -> Fraction:
    """Intersection number ``D . C`` on ``V``."""
    return (D.k * (_anti_k_dot_s0(model) * C.s0 + C.f)
            + D.f * C.s0)


def intersect(model: Model, D1: DivisorClassV, D2: DivisorClassV) -> CurveClassV:
    """The curve class ``D1 . D2``.

    Uses ``(-K)^2 = K_V^2``, ``(-K).F = degree * f`` and ``F^2 = 0``.
    """
    ksq = anti_k_square(model)
    kf = CurveClassV(0, model.degree)
    return ksq * (D1.k * D2.k) + kf * (D1.k * D2.f + D1.f * D2.k)


def anti_k_square(model: Model) -> CurveClassV:
    return CurveClassV(model.degree, _ksq_f(model))


def anti_k_cube(model: Model) -> Fraction:
    return pair(model, ANTI_K, anti_k_square(model))


def g_divisor(model: DegreeOneModel) -> DivisorClassV:
    """``G_V``, the pull-back of ``(M - n2 L).(M - n3 L)`` restricted to Q."""
    if model.degree != 1:
        raise NotApplicable("G_V is defined for degree 1 models")
    if model.epsilon == 0:
        # K_V = -G_V + (n1/2 - 2) F
        return DivisorClassV(1, HALF * model.n1 - 2)
    # K_V = -G_V - (n1/2 + 2) F
    return DivisorClassV(1, -(HALF * model.n1 + 2))


def h_divisor(model: Model) -> DivisorClassV:
    """Pull-back ``H`` of the tautological class ``M``."""
    if model.degree == 2:
        return DivisorClassV(1, model.a + model.b - 2)
    G = g_divisor(model)
    if model.epsilon == 0:
        return G * 2 + FIBER * model.n3
    return (G + FIBER * model.n2) * 2


def effective_generators(model: Model) -> tuple[DivisorClassV, DivisorClassV]:
    """Generators of the effective cone used by the cone tests.

    Degree 1: ``G_V`` and ``F``.  Degree 2: ``H - n2 F`` and ``F``; this is
    the pull-back of the extremal effective class of X and is only known to
    be the full effective cone for ``a >= 0``.
    """
    if model.degree == 1:
        return g_divisor(model), FIBER
    return h_divisor(model) - FIBER * model.n2, FIBER


def special_section(model: DegreeOneModel) -> CurveClassV:
    """``s_B``, the base locus of ``|-K_V + kF|`` for large ``k``."""
    if model.degree != 1:
        raise NotApplicable("s_B is defined for degree 1 models")
    return CurveClassV(1, HALF * model.epsilon)


def to_view(model: Model, D: DivisorClassV) -> tuple[Fraction, Fraction]:
    """Coordinates of D in the ``(G_V, F)`` (degree 1) or ``(H, F)`` basis."""
    base = g_divisor(model) if model.degree == 1 else h_divisor(model)
    # D = x*base + y*F with base.k == 1
    x = D.k
    return x, D.f - x * base.f


def from_view(model: Model, x: Number, y: Number) -> DivisorClassV:
    base = g_divisor(model) if model.degree == 1 else h_divisor(model)
    return base * Fraction(x) + FIBER * Fraction(y)


@dataclass(frozen=True)
class IntersectionTable:
    """Intersection data of a model.

    ``entries`` holds the named values in the model's native basis
    (``"s0.G"``, ``"H^3"``, ...); the ``anti_k_*``/``F_*`` fields are the
    pairings in the ``(-K, F)`` x ``(s0, f)`` basis.
    """

    degree: int
    anti_k_s0: Fraction
    anti_k_f: Fraction
    F_s0: Fraction
    F_f: Fraction
    anti_k_square: CurveClassV
    anti_k_cube: Fraction
    K: tuple[Fraction, Fraction]  # K_V in the (G_V, F) or (H, F) view
    entries: dict = field(default_factory=dict, compare=False)


def intersection_table(model: Model) -> IntersectionTable:
    ak_s0 = _anti_k_dot_s0(model)
    entries: dict[str, Fraction] = {}
    if model.degree == 1:
        G = g_divisor(model)
        H = h_divisor(model)
        entries.update({
            "s0.F": pair(model, FIBER, S0),
            "f.G": pair(model, G, F_CURVE),
            "s0.G": pair(model, G, S0),
            "f.F": pair(model, FIBER, F_CURVE),
            "H.s0": pair(model, H, S0),
            "H.f": pair(model, H, F_CURVE),
        })
        entries["H"] = to_view(model, H)
    else:
        H = h_divisor(model)
        b = model.b
        entries.update({
            "H.s0": pair(model, H, S0),
            "H.f": pair(model, H, F_CURVE),
            "F.s0": pair(model, FIBER, S0),
            "F.f": pair(model, FIBER, F_CURVE),
            "H^3": Fraction(2 * b),
            "H^2F": Fraction(2),
            "HF^2": Fraction(0),
            "F^3": Fraction(0),
        })
        entries["H^2"] = intersect(model, H, H)
        entries["HF"] = intersect(model, H, FIBER)
    return IntersectionTable(
        degree=model.degree,
        anti_k_s0=ak_s0,
        anti_k_f=Fraction(1),
        F_s0=Fraction(1),
        F_f=Fraction(0),
        anti_k_square=anti_k_square(model),
        anti_k_cube=anti_k_cube(model),
        K=to_view(model, -ANTI_K),
        entries=entries,
    )


def anti_k_cube_from_triple_products(model: DegreeTwoModel) -> Fraction:
    """``(-K_V)^3`` expanded from ``H^3 = 2b, H^2F = 2, HF^2 = F^3 = 0``."""
    c = Fraction(model.a + model.b - 2)
    h3, h2f = Fraction(2 * model.b), Fraction(2)
    # -K = H - cF
    return h3 - 3 * c * h2f


@dataclass(frozen=True)
class CoverTable:
    """Intersection data pushed down to ``X`` through the double cover."""

    anti_k_cube: Fraction
    anti_k_square: CurveClassV
    anti_k_s0: Fraction
    anti_k_f: Fraction
    F_s0: Fraction
    F_f: Fraction


def table_via_double_cover(model: Model) -> CoverTable:
    """Recompute the intersection data on ``V`` from the Chow ring of ``X``.

    ``phi: V -> X`` has degree 2 onto its image (``Q`` for degree 1, ``X``
    for degree 2), ``phi^* M = H``, ``phi^* L = F``, ``phi_* s_0 = t_0`` and
    ``phi_* f = kappa * l`` with ``kappa = 2`` (degree 1) or ``1``.  Triple
    products and curve classes follow from the projection formula.
    """
    X = model.bundle
    if model.degree == 1:
        image = X.divisor(2, model.q_coeff)
        kappa = 2
        # -K_V = H/2 + c F
        c = (ANTI_K - h_divisor(model) * HALF).f
        anti_k = X.divisor(HALF, c)
    else:
        image = X.one
        kappa = 1
        anti_k = X.divisor(1, -(model.a + model.b - 2))
    cube = 2 * (anti_k ** 3 * image).degree()
    push = chow.curve_convert(2 * (anti_k ** 2 * image))
    ksq = CurveClassV(push.t0, push.l / kappa)
    # D.C = A.phi_*(C) for D = phi^*(A)
    t0, l = X.t0, X.l * kappa
    return CoverTable(
        anti_k_cube=cube,
        anti_k_square=ksq,
        anti_k_s0=chow.pair(anti_k, t0),
        anti_k_f=chow.pair(anti_k, l),
        F_s0=chow.pair(X.L, t0),
        F_f=chow.pair(X.L, l),
    )


# ---------------------------------------------------------------------------
# enumeration


class Dp2Box(NamedTuple):
    """Box ``|a| <= a_max``, ``n2 <= n2_max``."""

    a_max: int
    n2_max: int


def _dp1_models(max_n3: int) -> Iterator[DegreeOneModel]:
    # epsilon = 0: n1, n3 even, n2 = (n1 + n3)/2
    for n1 in range(0, max_n3 + 1, 2):
        for n3 in range(n1, max_n3 + 1, 2):
            if n1 + n3 > 0:
                yield DegreeOneModel(0, n1, (n1 + n3) // 2, n3)
    # epsilon = n1 > 0: n1 even, n2 >= 3 n1, n3 = 2 n2
    for n1 in range(2, max_n3 + 1, 2):
        for n2 in range(3 * n1, max_n3 // 2 + 1):
            yield DegreeOneModel(n1, n1, n2, 2 * n2)


def _dp2_models_with_sum(s: int) -> Iterator[DegreeTwoModel]:
    # a >= -2s covers every tuple surviving the constraints in build_dp2
    for a in range(-2 * s, s // 2 + 1):
        b = s - 2 * a
        for n1 in range(0, b // 2 + 1):
            try:
                yield DegreeTwoModel(a, n1, b - n1)
            except NotRealizable:
                continue


def _dp2_models_in_box(box: Dp2Box) -> Iterator[DegreeTwoModel]:
    for a in range(-box.a_max, box.a_max + 1):
        for n2 in range(box.n2_max + 1):
            for n1 in range(n2 + 1):
                try:
                    yield DegreeTwoModel(a, n1, n2)
                except NotRealizable:
                    continue


def enumerate_models(degree: int, bound) -> list[Model]:
    """All valid models inside ``bound``, sorted by parameter tuple.

    * degree 1: ``bound`` is the maximal ``n3``;
    * degree 2: ``bound`` is either the value of ``2a + b`` (1 or 2) or a
      :class:`Dp2Box`, in which case every valid model in the box is listed.
    """
    if degree == 1:
        if not isinstance(bound, int) or bound < 0:
            raise InvalidArgument(f"degree 1 bound must be a non-negative int, got {bound!r}")
        models = list(_dp1_models(bound))
    elif degree == 2:
        if isinstance(bound, Dp2Box):
            if bound.a_max < 0 or bound.n2_max < 0:
                raise InvalidArgument(f"box bounds must be non-negative: {bound}")
            models = list(_dp2_models_in_box(bound))
        elif isinstance(bound, int) and bound in (1, 2):
            models = list(_dp2_models_with_sum(bound))
        else:
            raise InvalidArgument(f"degree 2 bound must be 1, 2 or a Dp2Box, got {bound!r}")
    else:
        raise InvalidArgument(f"degree must be 1 or 2, got {degree}")
    return sorted(models, key=lambda m: m.params)


# ---------------------------------------------------------------------------
# construction identities


@dataclass(frozen=True)
class ConstructionReport:
    beta_h: int
    N: Fraction
    a_prime: int
    a: int
    KD_square: Fraction
    checks: dict


def construction_identities_dp1(model: DegreeOneModel, beta_h: int) -> ConstructionReport:
    """Check the identities tying ``epsilon`` to the class of ``Q``.

    ``D = H.Q`` with ``H ~ M + beta_h L`` is a conic bundle with
    ``N = t_B . H`` degenerate fibers; contracting to a ruled surface gives
    ``K_D^2 + 2N = 8``.
    """
    if model.degree != 1:
        raise NotApplicable("construction identities are for degree 1 models")
    if beta_h <= 0:
        raise InvalidArgument("beta_h must be positive")
    X = model.bundle
    br = branch_data_dp1(model)
    H = X.divisor(1, beta_h)
    N = chow.pair(H, br.tB)
    a_prime = model.a_prime
    a = 2 * a_prime
    b = model.b
    e = model.epsilon
    kd2 = 8 - 2 * b - 2 * beta_h - 3 * Fraction(a)
    checks = {
        "N = beta_H + epsilon": N == beta_h + e,
        "N = b + beta_H + 3a/2": N == b + beta_h + Fraction(3 * a, 2),
        "epsilon = b + 3a'": e == b + 3 * a_prime,
        "Q = 2M + aL": br.Q == X.divisor(2, a),
        "R = 3M - 3 epsilon L": model.r_coeff == -3 * e and br.R == X.divisor(3, -3 * e),
        "R.t_B = 0": chow.pair(br.R, br.tB) == 0,
        "K_D^2 + 2N = 8": kd2 + 2 * N == 8,
    }
    if not all(checks.values()):
        failed = [k for k, v in checks.items() if not v]
        raise RuntimeError(f"construction identities failed for {model}: {failed}")
    return ConstructionReport(beta_h, N, a_prime, a, kd2, checks)


# ---------------------------------------------------------------------------
# Picard-lattice maps and restrictions


@dataclass(frozen=True)
class PicMap:
    """Integer matrix acting on ``(k, f)`` coordinates of ``k(-K) + fF``."""

    matrix: tuple[tuple[int, int], tuple[int, int]]

    def apply(self, D: DivisorClassV) -> DivisorClassV:
        (p, q), (r, s) = self.matrix
        return DivisorClassV(p * D.k + q * D.f, r * D.k + s * D.f)

    def compose(self, other: "PicMap") -> "PicMap":
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        return PicMap(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))


FLOP_222 = DegreeOneModel(0, 2, 2, 2)


def flop_transform_222(model: Model | None = None) -> PicMap:
    """Lattice map induced by the flop of ``s_0`` on the ``(0; 2,2,2)`` model.

    It fixes ``-K`` and sends ``F`` to ``G_U = -K - F``.
    """
    if model is not None and model != FLOP_222:
        raise NotApplicable(f"the flop exists only for {FLOP_222}, not {model}")
    return PicMap(((1, 1), (0, -1)))


class Restriction(NamedTuple):
    surface_type: int
    section: Fraction
    fiber: Fraction
    effective: bool


def restrict_to_G(model: Model, D: DivisorClassV) -> Restriction:
    """Class of ``D|_{G_V}`` as ``section * s_0 + fiber * f``.

    ``D = n(-K) + mF``.  ``surface_type`` is ``k`` for the ruled surface
    ``G ~ F_k`` in X that ``G_V`` double covers (``k = n1``).
    """
    if model.degree != 1:
        raise NotApplicable("restriction to G_V is defined for degree 1 models")
    n, m = D.k, D.f
    n1, n2, n3 = model.n1, model.n2, model.n3
    if model.epsilon == 0:
        # |n(-K) - m'F| restricts to n s_0 - (m' + n(n1/2 + n3 - n2 - 2)) f
        fiber = -(-m + n * (HALF * n1 + n3 - n2 - 2))
    else:
        fiber = m + n * (n1 - n2 + 2)
    return Restriction(n1, n, fiber, n >= 0 and fiber >= 0)
