"""Effective and nef cone tests, thresholds and the two rigidity criteria."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSystem, Undetermined
from .models import (
    ANTI_K,
    F_CURVE,
    S0,
    DivisorClassV,
    Model,
    anti_k_cube,
    anti_k_square,
    effective_generators,
    pair,
)


def _cone_coords(model: Model, D: DivisorClassV) -> tuple[Fraction, Fraction]:
    g1, g2 = effective_generators(model)
    # g2 is F; g1 has k == 1
    x = D.k / g1.k
    return x, D.f - x * g1.f


def effective_divisor_test(model: Model, D: DivisorClassV) -> bool:
    """True iff D lies in the cone spanned by :func:`effective_generators`."""
    x, y = _cone_coords(model, D)
    return x >= 0 and y >= 0


def is_nef(model: Model, D: DivisorClassV) -> bool:
    return pair(model, D, S0) >= 0 and pair(model, D, F_CURVE) >= 0


def nef_offset(model: Model) -> Fraction:
    """``m0 = min{r : -K + rF is nef}``.

    ``(-K + rF).f = (-K).f = 1`` always, so only ``s_0`` constrains r.
    """
    return -pair(model, ANTI_K, S0)


@dataclass(frozen=True)
class NefResult:
    nef: bool
    m0: Fraction


def nef_and_m0(model: Model, D: DivisorClassV) -> NefResult:
    return NefResult(is_nef(model, D), nef_offset(model))


@dataclass(frozen=True)
class ThresholdResult:
    mu: Fraction
    alpha: Fraction
    equal: bool
    heuristic: bool = False


def thresholds(model: Model, D: DivisorClassV) -> ThresholdResult:
    """Quasi-effective threshold ``mu`` and adjunction threshold ``alpha``.

    For ``D = n(-K) + mF``, ``alpha`` is the largest ``t`` with ``D + tK``
    effective, found exactly from the two cone coordinates of ``D + tK``,
    both affine in ``t``.  Degree-2 models with ``a < 0`` are flagged
    ``heuristic`` because their effective cone is not known exactly.
    """
    n = D.k
    if n <= 0:
        raise InvalidSystem(f"need n > 0, got {n}")
    if not effective_divisor_test(model, D):
        raise InvalidSystem(f"{D} is not effective, the linear system is empty")
    x0, y0 = _cone_coords(model, D)
    dx, dy = _cone_coords(model, -ANTI_K)
    bounds = [-c0 / dc for c0, dc in ((x0, dx), (y0, dy)) if dc < 0]
    # -K is big, so K has a negative cone coordinate and bounds is non-empty
    alpha = max(Fraction(0), min(bounds))
    return ThresholdResult(
        mu=Fraction(n),
        alpha=alpha,
        equal=alpha == n,
        heuristic=model.degree == 2 and model.a < 0,
    )


def k2_condition(model: Model) -> bool:
    """No cycle ``a K^2 - b f`` with ``a, b > 0`` is effective.

    ``K^2 = d s_0 + y f``; ``aK^2 - bf`` has positive ``s_0``-coefficient, so
    some choice is effective exactly when ``y > 0``.
    """
    return anti_k_square(model).f <= 0


def iskovskikh_value(model: Model) -> Fraction:
    return anti_k_cube(model) + nef_offset(model) + 1


@dataclass(frozen=True)
class ConditionReport:
    k2_holds: bool
    isk_value: Fraction
    isk_holds: bool
    m0: Fraction


def conditions(model: Model) -> ConditionReport:
    value = iskovskikh_value(model)
    return ConditionReport(
        k2_holds=k2_condition(model),
        isk_value=value,
        isk_holds=value <= 2,
        m0=nef_offset(model),
    )


class FixedComponentBound(str, enum.Enum):
    """What a linear system ``|n(-K) + mF|`` without fixed components forces."""

    M_NON_NEGATIVE_FORCED = "mNonNegativeForced"
    M_POSITIVE_FORCED = "mPositiveForced"
    M_POSITIVE_ONLY_IF_N3_EQ_2 = "mPositiveAllowedOnlyIf_n3_eq_2"


def sweeping_curve_bound(model: Model) -> Fraction:
    """Upper bound on ``-m/n`` from a moving curve ``C ~ s_0 + n1 f``.

    Only meaningful for degree 2 with ``beta = 2``: ``D.C >= 0`` for a
    general member gives ``-m/n <= (-K).C = (n1 - n2 + 1)/2``.
    """
    return pair(model, ANTI_K, S0 + F_CURVE * model.n1)


def no_fixed_components_bound(model: Model) -> FixedComponentBound:
    if model.degree == 1:
        if model.epsilon == 0:
            return FixedComponentBound.M_POSITIVE_ONLY_IF_N3_EQ_2
        return FixedComponentBound.M_POSITIVE_FORCED
    beta = model.beta
    if beta <= 0:
        # K^2-condition holds
        return FixedComponentBound.M_NON_NEGATIVE_FORCED
    if beta == 2:
        bound = sweeping_curve_bound(model)
        if bound > 0:
            raise RuntimeError(f"sweeping curve bound {bound} > 0 for {model}")
        return FixedComponentBound.M_NON_NEGATIVE_FORCED
    raise Undetermined(f"beta = {beta}: sign of m is not decided for {model}")
