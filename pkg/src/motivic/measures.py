"""Motivic measures: ring homomorphisms out of the free model.

========== =========================== ==============
measure    generator X                 L
========== =========================== ==============
point      #X(F_{q^m})                 q^m
poincare   Poincare polynomial of X    t^2
e          E(X) in Z[u, v]             uv
euler      E(X)(1, 1)                  1
========== =========================== ==============

The E-polynomial of a smooth proper X is ``sum (-1)^(p+q) h^{p,q} u^p v^q``,
so a genus-g curve has ``E = 1 - g u - g v + uv``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import CertificateError
from .kapranov import SymbolicCurve
from .polys import T, U, V, IntPoly
from .ring import MeasureData, RingElement
from .series import TruncatedSeries

__all__ = [
    "MeasureSpec",
    "apply_measure",
    "hodge_numbers",
    "macdonald_sym_e_series",
    "poincare_from_e",
    "curve_e_polynomial",
    "curve_with_hodge_data",
    "e_numerator",
]

_KINDS = ("point_count", "poincare", "e_polynomial", "euler")


@dataclass(frozen=True)
class MeasureSpec:
    kind: str
    q: int | None = None
    extension: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown measure kind {self.kind!r}")
        if self.kind == "point_count":
            if self.q is None or self.q < 2:
                raise ValueError("point counting needs a field size q >= 2")
            if self.extension < 1:
                raise ValueError("extension degree must be positive")

    @classmethod
    def point_count(cls, q: int, extension: int = 1) -> MeasureSpec:
        return cls("point_count", q, extension)

    @classmethod
    def poincare(cls) -> MeasureSpec:
        return cls("poincare")

    @classmethod
    def e_polynomial(cls) -> MeasureSpec:
        return cls("e_polynomial")

    @classmethod
    def euler(cls) -> MeasureSpec:
        return cls("euler")

    @property
    def name(self) -> str:
        if self.kind == "point_count":
            return f"point_count(q={self.q}^{self.extension})"
        return self.kind


def _missing(g, spec: MeasureSpec, what: str):
    return ValueError(f"generator {g.name!r} carries no {what} needed by measure {spec.name}")


def _generator_image(spec: MeasureSpec, g):
    d = g.data
    if spec.kind == "point_count":
        counts = d.point_counts if d is not None else None
        if counts is None or len(counts) < spec.extension:
            raise _missing(g, spec, f"point count over the degree-{spec.extension} extension")
        return counts[spec.extension - 1]
    if spec.kind == "poincare":
        if d is None or d.poincare_polynomial is None:
            raise _missing(g, spec, "Poincare polynomial")
        return d.poincare_polynomial
    if d is None or d.e_polynomial is None:
        raise _missing(g, spec, "E-polynomial")
    if spec.kind == "euler":
        return d.e_polynomial(1, 1)
    return d.e_polynomial


def apply_measure(spec: MeasureSpec, x: RingElement):
    """Image of x under the measure.

    Point counting and Euler characteristic accept Laurent input (point counts
    then land in Z[1/q] as a ``Fraction``); the polynomial-valued measures do not.
    """
    if spec.kind == "point_count":
        one, lval = 1, spec.q ** spec.extension
    elif spec.kind == "euler":
        one, lval = 1, 1
    elif spec.kind == "poincare":
        one, lval = IntPoly.constant(1, 1), T ** 2
    else:
        one, lval = IntPoly.constant(2, 1), U * V
    cache = {}
    total = one * 0
    for m, c in x.terms.items():
        term = one * c
        for g, e in m.gens:
            if g.name not in cache:
                cache[g.name] = _generator_image(spec, g)
            term = term * cache[g.name] ** e
        if m.l >= 0:
            term = term * lval ** m.l
        elif spec.kind in ("point_count", "euler"):
            term = Fraction(term, lval ** (-m.l))
        else:
            raise ValueError(f"measure {spec.name} is undefined on Laurent elements")
        total = total + term
    if isinstance(total, Fraction) and total.denominator == 1:
        return total.numerator
    return total


def hodge_numbers(e: IntPoly) -> dict[tuple[int, int], int]:
    """Read h^{p,q} off an E-polynomial of pure type; raises if a sign is wrong."""
    if e.nvars != 2:
        raise ValueError("E-polynomial must be a polynomial in u, v")
    out = {}
    for (p, q), c in e.sorted_terms():
        h = c * (-1) ** (p + q)
        if h < 0:
            raise ValueError(
                f"coefficient {c} of u^{p} v^{q} is not a signed Hodge number of pure type"
            )
        out[(p, q)] = h
    return out


def macdonald_sym_e_series(e_x: IntPoly, N: int) -> list[IntPoly]:
    """E-polynomials of Sym^0 X .. Sym^{N-1} X from Macdonald's product

    ``prod_{p,q} (1 - u^p v^q t)^{(-1)^{p+q+1} h^{p,q}}``.
    """
    if N < 1:
        raise ValueError("N must be positive")
    h = hodge_numbers(e_x)
    one = IntPoly.constant(2, 1)
    series = TruncatedSeries([one], N)
    for (p, q), mult in h.items():
        mono = U ** p * V ** q
        if (p + q) % 2:
            # (1 - m t)^h is a polynomial
            factor = [comb(mult, k) * (-1) ** k * mono ** k for k in range(min(mult, N - 1) + 1)]
            series = series.mul_poly(factor)
        else:
            geometric = TruncatedSeries([mono ** k for k in range(N)], N)
            for _ in range(mult):
                series = series * geometric
    return list(series.coeffs)


def poincare_from_e(e: IntPoly) -> IntPoly:
    """Poincare polynomial ``sum h^{p,q} t^{p+q}``, i.e. ``E(-t, -t)``."""
    return e.substitute(-T, -T)


def curve_e_polynomial(g: int) -> IntPoly:
    return 1 - g * U - g * V + U * V


def curve_with_hodge_data(g: int, label: str = "C") -> SymbolicCurve:
    """A symbolic curve whose generators carry E- and Poincare data.

    ``Jac`` gets ``(1-u)^g (1-v)^g`` and each free symbol ``Sym^k`` gets the
    Macdonald coefficient.
    """
    e_c = curve_e_polynomial(g)
    sym_e = macdonald_sym_e_series(e_c, max(2 * g - 2, 2))
    e_jac = (1 - U) ** g * (1 - V) ** g

    def md(e):
        return MeasureData(e_polynomial=e, poincare_polynomial=poincare_from_e(e))

    data = {"C": md(e_c), "Jac": md(e_jac)}
    for k in range(2, 2 * g - 2):
        data[k] = md(sym_e[k])
    return SymbolicCurve(g, label, data)


def e_numerator(g: int, N: int) -> list[IntPoly]:
    """E-measure image of ``(1-t)(1-Lt) Z(t)`` for a genus-g curve.

    Certifies the result is ``(1-ut)^g (1-vt)^g`` exactly, with nothing above
    degree 2g.
    """
    if g < 1:
        raise ValueError("genus must be positive")
    if N < 2 * g + 3:
        raise ValueError(f"order must be at least 2g+3 = {2 * g + 3}")
    z = TruncatedSeries(macdonald_sym_e_series(curve_e_polynomial(g), N), N)
    one = IntPoly.constant(2, 1)
    p = z.mul_poly([one, -(one + U * V), U * V])
    target = [IntPoly(2)] * N
    for i in range(g + 1):
        for j in range(g + 1):
            if i + j < N:
                target[i + j] = target[i + j] + comb(g, i) * comb(g, j) * (-1) ** (i + j) * U ** i * V ** j
    for k in range(N):
        if p[k] != target[k]:
            raise CertificateError(
                f"E-numerator coefficient of t^{k} differs from (1-ut)^g(1-vt)^g", p[k]
            )
    return list(p.coeffs[: 2 * g + 1])
