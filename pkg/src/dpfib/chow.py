"""Chow ring of a projectivized split bundle over P^1.

For ``E = O + O(n_1) + ... + O(n_{r-1})`` on P^1 with ``b = sum(n_i)`` the ring
of ``X = P(E)`` is generated by the tautological class ``M`` and the fiber
class ``L`` subject to::

    L^2 = 0,    M^r = b * M^(r-1) L,    deg(M^(r-1) L) = 1.

Every homogeneous class of codimension ``d >= 1`` is therefore
``x * M^d + y * M^(d-1) L``; codimension 0 classes are scalars.  Curve classes
are also written in the basis ``t_0 = M^(r-1) - b M^(r-2) L`` (the section
given by ``E -> O``) and ``l = M^(r-2) L`` (a line in a fiber), for which::

    M.t_0 = 0,  M.l = 1,  L.t_0 = 1,  L.l = 0.

All coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import InvalidArgument, InvalidRank, MixedBundles, NotACurveClass

Number = Union[int, Fraction]


@dataclass(frozen=True)
class BundleSpec:
    """Normalized split bundle ``O + O(n_1) + ... + O(n_{r-1})``."""

    twists: tuple[int, ...]
    # shift subtracted from the caller's twists; not part of the identity
    shift: int = field(default=0, compare=False)

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def b(self) -> int:
        return sum(self.twists)

    # generators
    @property
    def one(self) -> "ChowClass":
        return ChowClass(self, 0, Fraction(1))

    @property
    def M(self) -> "ChowClass":
        return ChowClass(self, 1, Fraction(1))

    @property
    def L(self) -> "ChowClass":
        return ChowClass(self, 1, Fraction(0), Fraction(1))

    @property
    def t0(self) -> "CurveClassX":
        return CurveClassX(self, Fraction(1), Fraction(0))

    @property
    def l(self) -> "CurveClassX":  # noqa: E743
        return CurveClassX(self, Fraction(0), Fraction(1))

    def divisor(self, m: Number, l: Number) -> "ChowClass":
        """The divisor class ``m*M + l*L``."""
        return ChowClass(self, 1, Fraction(m), Fraction(l))

    def curve(self, t0: Number, l: Number) -> "CurveClassX":
        return CurveClassX(self, Fraction(t0), Fraction(l))

    def point(self, degree: Number) -> "ChowClass":
        return ChowClass(self, self.rank, Fraction(0), Fraction(degree))


def make_bundle(rank: int, twists: Sequence[int]) -> BundleSpec:
    """Build a normalized :class:`BundleSpec`.

    The twists are sorted and shifted so that the smallest one is 0; the
    applied shift is kept in ``BundleSpec.shift``.
    """
    if rank < 2:
        raise InvalidRank(f"rank must be >= 2, got {rank}")
    if len(twists) != rank:
        raise InvalidArgument(f"expected {rank} twists, got {len(twists)}")
    ts = sorted(int(t) for t in twists)
    shift = ts[0]
    return BundleSpec(tuple(t - shift for t in ts), shift)


class ChowClass:
    """Homogeneous class ``coeff_m * M^d + coeff_l * M^(d-1) L``.

    Stored reduced: in top codimension ``d = r`` the ``M^r`` term is rewritten
    as ``b * M^(r-1) L``, so only ``coeff_l`` (the degree) survives.  Classes
    of codimension above ``r`` exist only as zero classes produced by
    :meth:`__mul__`.
    """

    __slots__ = ("bundle", "codim", "coeff_m", "coeff_l")

    def __init__(self, bundle: BundleSpec, codim: int, coeff_m: Number = 0, coeff_l: Number = 0):
        coeff_m = Fraction(coeff_m)
        coeff_l = Fraction(coeff_l)
        r = bundle.rank
        if codim < 0:
            raise InvalidArgument(f"negative codimension {codim}")
        if codim == 0 and coeff_l:
            raise InvalidArgument("codimension 0 class has no L-term")
        if codim == r:
            coeff_l += bundle.b * coeff_m
            coeff_m = Fraction(0)
        elif codim > r:
            if coeff_m or coeff_l:
                raise InvalidArgument(f"nonzero class in codimension {codim} > {r}")
        object.__setattr__(self, "bundle", bundle)
        object.__setattr__(self, "codim", codim)
        object.__setattr__(self, "coeff_m", coeff_m)
        object.__setattr__(self, "coeff_l", coeff_l)

    def __setattr__(self, name, value):
        raise AttributeError("ChowClass is immutable")

    def __repr__(self):
        return f"ChowClass(codim={self.codim}, M^d={self.coeff_m}, M^(d-1)L={self.coeff_l})"

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return (self.bundle, self.codim, self.coeff_m, self.coeff_l) == (
            other.bundle, other.codim, other.coeff_m, other.coeff_l)

    def __hash__(self):
        return hash((self.bundle, self.codim, self.coeff_m, self.coeff_l))

    def is_zero(self) -> bool:
        return not self.coeff_m and not self.coeff_l

    def _check(self, other: "ChowClass"):
        if self.bundle != other.bundle:
            raise MixedBundles("classes live on different bundles")

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check(other)
        if self.codim != other.codim:
            raise InvalidArgument("cannot add classes of different codimension")
        return ChowClass(self.bundle, self.codim,
                         self.coeff_m + other.coeff_m, self.coeff_l + other.coeff_l)

    def __neg__(self):
        return ChowClass(self.bundle, self.codim, -self.coeff_m, -self.coeff_l)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.bundle, self.codim, self.coeff_m * other, self.coeff_l * other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidArgument("negative power")
        out = self.bundle.one
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> Fraction:
        """Degree of a top-codimension class (coefficient of the point class)."""
        if self.codim != self.bundle.rank:
            raise InvalidArgument(f"degree needs codimension {self.bundle.rank}, got {self.codim}")
        return self.coeff_l


def mul(c1: ChowClass, c2: ChowClass) -> ChowClass:
    """Product in the Chow ring.

    Total codimension above the dimension of ``X`` gives the zero class.
    """
    c1._check(c2)
    d = c1.codim + c2.codim
    bundle = c1.bundle
    if d > bundle.rank:
        return ChowClass(bundle, d)
    # (x M^p + y M^(p-1)L)(x' M^q + y' M^(q-1)L), L^2 = 0
    coeff_m = c1.coeff_m * c2.coeff_m
    coeff_l = c1.coeff_m * c2.coeff_l + c1.coeff_l * c2.coeff_m
    return ChowClass(bundle, d, coeff_m, coeff_l)


@dataclass(frozen=True)
class CurveClassX:
    """Curve class ``t0 * t_0 + l * l`` on ``X``."""

    bundle: BundleSpec
    t0: Fraction
    l: Fraction  # noqa: E741

    def __add__(self, other):
        if self.bundle != other.bundle:
            raise MixedBundles("curves live on different bundles")
        return CurveClassX(self.bundle, self.t0 + other.t0, self.l + other.l)

    def __mul__(self, k):
        return CurveClassX(self.bundle, self.t0 * k, self.l * k)

    __rmul__ = __mul__

    def as_chow(self) -> ChowClass:
        """Back to the ``M^(r-1), M^(r-2) L`` basis."""
        r = self.bundle.rank
        return ChowClass(self.bundle, r - 1, self.t0, self.l - self.bundle.b * self.t0)


def curve_convert(c: ChowClass) -> CurveClassX:
    """Rewrite a codimension ``r-1`` class in the ``(t_0, l)`` basis."""
    r = c.bundle.rank
    if c.codim != r - 1:
        raise NotACurveClass(f"curve classes have codimension {r - 1}, got {c.codim}")
    # x M^(r-1) + y M^(r-2) L = x (t_0 + b l) + y l
    return CurveClassX(c.bundle, c.coeff_m, c.bundle.b * c.coeff_m + c.coeff_l)


def pair(d: ChowClass, c: CurveClassX) -> Fraction:
    """Intersection number of a divisor with a curve."""
    if d.bundle != c.bundle:
        raise MixedBundles("divisor and curve live on different bundles")
    if d.codim != 1:
        raise InvalidArgument(f"expected a divisor, got codimension {d.codim}")
    return d.coeff_m * c.l + d.coeff_l * c.t0
