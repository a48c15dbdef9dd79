"""Exact intersection theory and rigidity classification for del Pezzo
fibrations of degree 1 and 2 over P^1."""

from .chow import BundleSpec, ChowClass, CurveClassX, curve_convert, make_bundle
from .verdicts import NonRigidKind, Status, Verdict, classify, classify_many
from .cones import conditions, effective_divisor_test, nef_and_m0, thresholds
from .errors import (
    DpfibError,
    InvalidArgument,
    InvalidRank,
    InvalidSystem,
    MixedBundles,
    NotACurveClass,
    NotApplicable,
    NotRealizable,
    ProductCase,
    Undetermined,
)
from .models import (
    ANTI_K,
    FIBER,
    DegreeOneModel,
    DegreeTwoModel,
    DivisorClassV,
    Dp2Box,
    build_dp1,
    build_dp2,
    build_model,
    enumerate_models,
    intersection_table,
)
from .nf import NFSystem, feasibility_search, flop_exclusion_thresholds, nf_system, reduce_to_quadratic
from .verify import VerifyBox, verify_all

__version__ = "0.1.0"
