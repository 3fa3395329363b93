"""Kapranov zeta functions of curves with a rational point.

The symmetric powers of a genus-g curve C are modeled by

* ``Sym^0 = 1`` and ``Sym^1 = [C]``,
* free symbols ``Sym^k(C)`` of dimension k for ``2 <= k <= 2g-3``,
* ``Sym^{2g-2} = [Jac] [P^{g-2}] + L^{g-1}`` (the canonical bundle is the only
  degree ``2g-2`` line bundle with g sections),
* ``Sym^n = [Jac] [P^{n-g}]`` for ``n >= 2g-1`` (projective bundle over the Jacobian).

``(1-t)(1-Lt) Z(t)`` then collapses to a polynomial of degree 2g, which
:func:`numerator` certifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import CertificateError
from .ring import (
    L,
    ONE,
    ZERO,
    Generator,
    GeneratorRegistry,
    MeasureData,
    RingElement,
    gen,
    lefschetz_power,
    projective_class,
    to_dict,
    v_L,
)
from .series import TruncatedSeries

__all__ = [
    "SymbolicCurve",
    "TruncatedSeries",
    "sym_class",
    "kapranov_series",
    "numerator",
    "NumeratorCertificate",
    "admissible_triples",
    "stratum_term",
    "lemma_divisibility_report",
    "LemmaReport",
]


@dataclass(frozen=True)
class SymbolicCurve:
    """Generators describing a smooth proper genus-g curve with a rational point.

    ``data`` optionally attaches measure data by role: ``"C"``, ``"Jac"`` and the
    integers k for the free symbols ``Sym^k``.
    """

    genus: int
    label: str = "C"
    data: Mapping[object, MeasureData] | None = field(default=None, compare=False, repr=False)
    gen_C: Generator = field(init=False)
    gen_Jac: Generator = field(init=False)
    free_syms: tuple[Generator, ...] = field(init=False)

    def __post_init__(self):
        g = self.genus
        if int(g) != g or g < 1:
            raise ValueError("genus must be a positive integer")
        data = dict(self.data or {})
        c = Generator(self.label, 1, data=data.get("C"))
        if g == 1:
            jac = c
        else:
            jac = Generator(f"Jac({self.label})", g, data=data.get("Jac"))
        syms = tuple(
            Generator(f"Sym^{k}({self.label})", k, data=data.get(k)) for k in range(2, 2 * g - 2)
        )
        object.__setattr__(self, "gen_C", c)
        object.__setattr__(self, "gen_Jac", jac)
        object.__setattr__(self, "free_syms", syms)

    @property
    def C(self) -> RingElement:
        return gen(self.gen_C)

    @property
    def Jac(self) -> RingElement:
        return gen(self.gen_Jac)

    def registry(self) -> GeneratorRegistry:
        return GeneratorRegistry([self.gen_C, self.gen_Jac, *self.free_syms])


def sym_class(curve: SymbolicCurve, n: int) -> RingElement:
    g = curve.genus
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    if n == 1:
        return curve.C
    if n <= 2 * g - 3:
        return gen(curve.free_syms[n - 2])
    if n == 2 * g - 2:
        return curve.Jac * projective_class(g - 2) + lefschetz_power(g - 1)
    return curve.Jac * projective_class(n - g)


def kapranov_series(curve: SymbolicCurve, N: int) -> TruncatedSeries:
    if N < 1:
        raise ValueError("series order must be positive")
    return TruncatedSeries([sym_class(curve, n) for n in range(N)], N)


@dataclass(frozen=True)
class NumeratorCertificate:
    genus: int
    order: int
    coefficients: tuple[RingElement, ...]
    degree_check: bool
    p0_check: bool
    p2g_check: bool

    @property
    def ok(self) -> bool:
        return self.degree_check and self.p0_check and self.p2g_check

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "numerator": [to_dict(c) for c in self.coefficients],
            "degree_check": self.degree_check,
            "p0_check": self.p0_check,
            "p2g_check": self.p2g_check,
        }


def numerator(curve: SymbolicCurve, N: int) -> NumeratorCertificate:
    """Certify that ``(1-t)(1-Lt) Z(t) mod t^N`` is a polynomial of degree 2g.

    Raises :class:`CertificateError` if a coefficient above degree 2g survives.
    """
    g = curve.genus
    if N < 2 * g + 3:
        raise ValueError(f"order must be at least 2g+3 = {2 * g + 3}")
    z = kapranov_series(curve, N)
    p = z.mul_poly([ONE, -(1 + L), L])
    for k in range(2 * g + 1, N):
        if p[k]:
            raise CertificateError(
                f"coefficient of t^{k} is nonzero above degree 2g={2 * g}", p[k]
            )
    coeffs = p.coeffs[: 2 * g + 1]
    return NumeratorCertificate(
        genus=g,
        order=N,
        coefficients=tuple(coeffs),
        degree_check=True,
        p0_check=coeffs[0] == ONE,
        p2g_check=coeffs[2 * g] == lefschetz_power(g),
    )


def admissible_triples(n: int, g: int) -> list[tuple[int, int, int]]:
    """Possible (h0(M), h0(M(-x)), h0(M(-2x))) for a degree-n line bundle M, n > g.

    Riemann's inequality gives the lower bounds; dropping a point lowers h0 by
    at most one; h0 of a degree-n bundle is at most n+1.
    """
    if g < 1 or n <= g:
        raise ValueError("admissible triples need n > g >= 1")
    d = n - g
    out = []
    for a in range(d + 1, n + 2):
        for b in (a - 1, a):
            if b < d:
                continue
            for c in (b - 1, b):
                if c < d - 1 or c < 0:
                    continue
                out.append((a, b, c))
    out.sort()
    return out


def stratum_term(a: int, b: int, c: int) -> RingElement:
    """``[P^{a-1}] - [P^{b-1}] + L(-[P^{b-1}] + [P^{c-1}])`` with ``[P^{-1}] = 0``."""
    if not a >= b >= c >= 0:
        raise ValueError("stratum_term needs a >= b >= c >= 0")
    pa, pb, pc = projective_class(a - 1), projective_class(b - 1), projective_class(c - 1)
    return pa - pb + L * (pc - pb)


@dataclass(frozen=True)
class LemmaReport:
    n: int
    g: int
    rows: tuple[tuple[tuple[int, int, int], RingElement, int | float, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for *_, ok in self.rows)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "triples": [
                {
                    "abc": list(abc),
                    "term": to_dict(term),
                    "v_L": None if val == float("inf") else val,
                    "ok": ok,
                }
                for abc, term, val, ok in self.rows
            ],
            "pass": self.passed,
        }


def lemma_divisibility_report(n: int, g: int) -> LemmaReport:
    """Check that every stratum of Pic^n contributes a multiple of ``L^{n-g}``."""
    rows = []
    for abc in admissible_triples(n, g):
        term = stratum_term(*abc)
        val = v_L(term)
        rows.append((abc, term, val, (not term) or val >= n - g))
    return LemmaReport(n, g, tuple(rows))
