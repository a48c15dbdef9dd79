"""Sparse multivariate polynomials with exact rational coefficients.

Just enough algebra to expand and compare the inequality certificates:
``+``, ``-``, ``*``, integer powers, evaluation and structural equality.
Monomials are sorted tuples of ``(variable, exponent)`` pairs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

Scalar = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[str, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for v, k in b:
        exps[v] = exps.get(v, 0) + k
    return tuple(sorted(exps.items()))


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(): c})

    @staticmethod
    def _lift(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def __call__(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for v, k in m:
                t *= Fraction(values[v]) ** k
            total += t
        return total

    def subs(self, values: Mapping[str, Scalar]) -> "Poly":
        """Substitute numbers for some variables."""
        out = Poly()
        for m, c in self.terms.items():
            coeff = c
            rest = []
            for v, k in m:
                if v in values:
                    coeff *= Fraction(values[v]) ** k
                else:
                    rest.append((v, k))
            out = out + Poly({tuple(rest): coeff})
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda mc: (-sum(k for _, k in mc[0]), mc[0])):
            factors = [v if k == 1 else f"{v}**{k}" for v, k in m]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return "+".join(parts).replace("+-", "-")
