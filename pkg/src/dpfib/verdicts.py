"""Rigidity verdicts for degree-1 and degree-2 models."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .models import DegreeOneModel, DegreeTwoModel, Model, enumerate_models

SCHEMA_VERSION = 1


class Status(str, enum.Enum):
    RIGID = "Rigid"
    NON_RIGID = "NonRigid"
    UNKNOWN = "Unknown"


class NonRigidKind(str, enum.Enum):
    DP1_FLOP_222 = "Dp1Flop222"
    DP1_VERONESE_CONE = "Dp1VeroneseCone"
    DP2_CONIC_BUNDLE = "Dp2ConicBundle"
    DP2_ANTIFLIP_TO_DP1 = "Dp2AntiflipToDp1"
    DP2_FLOP_SELF = "Dp2FlopSelf"
    DP2_BLOWUP_DOUBLE_SPACE = "Dp2BlowupDoubleSpace"
    DP2_SINGULAR_VERONESE_CONE = "Dp2SingularVeroneseCone"

    @property
    def description(self) -> str:
        return _DESCRIPTIONS[self]


_DESCRIPTIONS = {
    NonRigidKind.DP1_FLOP_222: "flop to a second fibration on degree-1 del Pezzo surfaces",
    NonRigidKind.DP1_VERONESE_CONE: "contracts onto the double cone over the Veronese surface",
    NonRigidKind.DP2_CONIC_BUNDLE: "conic bundle over P^2 via |-K-F|",
    NonRigidKind.DP2_ANTIFLIP_TO_DP1: "anti-flip in s_0 to a degree-1 fibration with a terminal point",
    NonRigidKind.DP2_FLOP_SELF: "flop in the s_0-curves to another degree-2 fibration",
    NonRigidKind.DP2_BLOWUP_DOUBLE_SPACE: "blow-up of the double space of index 2 in an elliptic curve",
    NonRigidKind.DP2_SINGULAR_VERONESE_CONE: "flop then contraction onto a singular double Veronese cone",
}

# citation tags; every verdict cites one of these
ANCHORS = {
    "dp1_th": "degree-1 rigidity theorem",
    "dp1_cor": "degree-1 classification with two exceptions",
    "prop_flop": "the (0;2,2,2) flop is the only non-square map",
    "conj_1": "conjecture on the (0;0,1,2) Veronese-cone structures",
    "rem_1": "remark extending the flop analysis to n1 = 0",
    "dp2_th": "degree-2 rigidity for beta <= 2",
    "lem_17": "list for 2a+b = 2; first three non-rigid",
    "rem_17": "remark after the 2a+b = 2 list: cases 4-7 expected rigid, unproved",
    "lem_sum1": "list for 2a+b = 1; first two non-rigid",
    "rem_sum1": "remark after the 2a+b = 1 list: case 3 expected rigid, unproved",
    "lem_sum0": "2a+b <= 0 does not occur",
}


@dataclass(frozen=True)
class Verdict:
    status: Status
    justification: str
    witness: NonRigidKind | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.justification not in ANCHORS:
            raise ValueError(f"unregistered citation {self.justification!r}")

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "status": self.status.value,
            "justification": self.justification,
            "witness": None if self.witness is None else self.witness.value,
            "notes": list(self.notes),
        }


def _classify_dp1(model: DegreeOneModel) -> Verdict:
    if model.params == (0, 2, 2, 2):
        return Verdict(
            Status.NON_RIGID, "prop_flop", NonRigidKind.DP1_FLOP_222,
            ("Bir(V) = Aut(V)",
             "exactly two smooth Mori fibration models, exchanged by a flop"),
        )
    if model.params == (0, 0, 1, 2):
        return Verdict(
            Status.NON_RIGID, "dp1_cor", NonRigidKind.DP1_VERONESE_CONE,
            ("see conj_1 for the expected birational structures",
             "rem_1: the flop argument is said to extend to n1 = 0 with a harder proof; "
             "not used to mark any map square"),
        )
    return Verdict(Status.RIGID, "dp1_cor")


_SUM2 = {
    (1, 0, 0): NonRigidKind.DP2_CONIC_BUNDLE,
    (-1, 2, 2): NonRigidKind.DP2_ANTIFLIP_TO_DP1,
    (0, 1, 1): NonRigidKind.DP2_FLOP_SELF,
}
_SUM1 = {
    (0, 0, 1): NonRigidKind.DP2_BLOWUP_DOUBLE_SPACE,
    (-1, 1, 2): NonRigidKind.DP2_SINGULAR_VERONESE_CONE,
}


def _classify_dp2(model: DegreeTwoModel) -> Verdict:
    if model.beta <= 2:
        return Verdict(Status.RIGID, "dp2_th")
    s = model.sum2ab
    table, lemma, remark = (_SUM2, "lem_17", "rem_17") if s == 2 else (_SUM1, "lem_sum1", "rem_sum1")
    kind = table.get(model.params)
    if kind is not None:
        return Verdict(Status.NON_RIGID, lemma, kind)
    return Verdict(
        Status.UNKNOWN, remark, None,
        ("expected rigid; no proof known", "not upgraded to Rigid"),
    )


def classify(model: Model) -> Verdict:
    """Verdict for a validated model; deterministic and total."""
    if isinstance(model, DegreeOneModel):
        return _classify_dp1(model)
    if isinstance(model, DegreeTwoModel):
        return _classify_dp2(model)
    raise TypeError(f"not a model: {model!r}")


def classify_many(degree: int, bound) -> list[tuple[Model, Verdict]]:
    return [(m, classify(m)) for m in enumerate_models(degree, bound)]
