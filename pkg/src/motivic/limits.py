"""L-adic and dimension-filtration limits of symmetric powers.

``R`` (the L-adic completion) is modeled by classes modulo ``L^N``; the
completion along the dimension filtration is modeled by truncating the free
Laurent model at a virtual-dimension level.  Everything reported here is a
statement about this model ("model-level"), not about the true Grothendieck ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import CertificateError
from .kapranov import SymbolicCurve, kapranov_series, sym_class
from .ring import (
    L,
    ONE,
    RingElement,
    duality,
    lefschetz_power,
    mod_l_power,
    to_dict,
    v_L,
    virtual_dim,
)

__all__ = [
    "CompletedElement",
    "geometric_series_inverse",
    "SymLimit",
    "sym_limit",
    "ZetaLimit",
    "limit_via_zeta",
    "mod_l_stabilization",
    "MSSPReport",
    "mssp_probe",
    "mssp_probe_curve",
    "limit_report",
    "MODEL_LEVEL",
]

MODEL_LEVEL = "model-level"


@dataclass(frozen=True)
class CompletedElement:
    """Class modulo ``L^precision``, stored as its canonical representative."""

    precision: int
    representative: RingElement

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be positive")
        object.__setattr__(
            self, "representative", mod_l_power(self.representative, self.precision)
        )

    def _check(self, other: CompletedElement) -> int:
        return min(self.precision, other.precision)

    def __add__(self, other: CompletedElement) -> CompletedElement:
        return CompletedElement(self._check(other), self.representative + other.representative)

    def __sub__(self, other: CompletedElement) -> CompletedElement:
        return CompletedElement(self._check(other), self.representative - other.representative)

    def __mul__(self, other) -> CompletedElement:
        if isinstance(other, CompletedElement):
            return CompletedElement(self._check(other), self.representative * other.representative)
        return CompletedElement(self.precision, self.representative * other)

    __rmul__ = __mul__

    def to_dict(self) -> dict:
        return {"precision": self.precision, "representative": to_dict(self.representative)}


def geometric_series_inverse(N: int) -> CompletedElement:
    """``1 + L + ... + L^{N-1}``, the inverse of ``1 - L`` modulo ``L^N``."""
    if N < 1:
        raise ValueError("precision must be positive")
    return CompletedElement(N, sum((lefschetz_power(i) for i in range(N)), RingElement()))


@dataclass(frozen=True)
class SymLimit:
    limit: CompletedElement
    bound_index: int
    stabilization_index: int
    verified_through: int


def sym_limit(curve: SymbolicCurve, N: int, window: int | None = None) -> SymLimit:
    """``[Jac](1 + L + L^2 + ...)`` modulo ``L^N``, checked against ``Sym^n`` for large n.

    Every ``n`` in ``[bound, bound + window)`` with ``bound = 2g - 1 + (N - 1)``
    must reduce to the limit; ``stabilization_index`` is the smallest n from
    which all computed terms agree.
    """
    if N < 1:
        raise ValueError("precision must be positive")
    g = curve.genus
    limit = CompletedElement(N, curve.Jac * geometric_series_inverse(N).representative)
    bound = 2 * g - 1 + (N - 1)
    window = window if window is not None else N + 4
    last = bound + window - 1
    reduced = [mod_l_power(sym_class(curve, n), N) for n in range(last + 1)]
    for n in range(bound, last + 1):
        if reduced[n] != limit.representative:
            raise CertificateError(f"Sym^{n} does not reduce to the limit modulo L^{N}", reduced[n])
    index = bound
    while index > 0 and reduced[index - 1] == limit.representative:
        index -= 1
    return SymLimit(limit, bound, index, last)


@dataclass(frozen=True)
class ZetaLimit:
    value: CompletedElement
    tail_start: int
    checks: dict = field(default_factory=dict)


def limit_via_zeta(curve: SymbolicCurve, N: int) -> ZetaLimit:
    """Evaluate ``(1-t) Z(t)`` at ``t = 1`` in ``R / L^N``.

    The coefficients ``d_n`` of ``(1-t) Z(t)`` must become geometric
    (``d_{n+1} = L d_n``) from ``n = 2g`` on; once ``v_L(d_n) >= N`` the rest of
    the sum vanishes modulo ``L^N``.  The value must equal :func:`sym_limit` and
    satisfy ``(1 - L) * value == [Jac]``.
    """
    if N < 1:
        raise ValueError("precision must be positive")
    g = curve.genus
    K = 2 * g + N + 4
    d = kapranov_series(curve, K).mul_poly([ONE, -ONE]).coeffs
    geometric = all(d[n + 1] == L * d[n] for n in range(2 * g, K - 1))
    if not geometric:
        raise CertificateError("coefficients of (1-t)Z(t) are not eventually geometric")
    tail = next(
        n for n in range(2 * g, K) if all(v_L(d[m]) >= N for m in range(n, K))
    )
    value = CompletedElement(N, sum(d[:tail], RingElement()))
    expected = sym_limit(curve, N).limit
    if value != expected:
        raise CertificateError("formal evaluation at t=1 disagrees with the limit of Sym^n", value)
    class_number = mod_l_power((1 - L) * value.representative, N) == mod_l_power(curve.Jac, N)
    if not class_number:
        raise CertificateError("(1 - L) * limit differs from [Jac] modulo L^N", value)
    return ZetaLimit(
        value,
        tail,
        {"geometric_tail": geometric, "matches_sym_limit": True, "class_number_identity": class_number},
    )


def mod_l_stabilization(sequence: Sequence[RingElement]) -> int | None:
    """Smallest i with ``sequence[i:]`` constant modulo L.

    Stabilization needs at least two witnesses, so an index pointing at the
    last entry alone does not count and the result is ``None``.
    """
    if not sequence:
        raise ValueError("mod_l_stabilization needs a nonempty sequence")
    reduced = [mod_l_power(x, 1) for x in sequence]
    i = len(reduced) - 1
    while i > 0 and reduced[i - 1] == reduced[-1]:
        i -= 1
    if i >= len(reduced) - 1:
        return None
    return i


@dataclass(frozen=True)
class MSSPReport:
    depth: int
    classes: tuple[RingElement, ...]
    difference_dims: tuple[int | float, ...]
    convergence_index: int | None
    truncation: RingElement | None
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        def dim(x):
            return None if math.isinf(x) else x

        return {
            "limit": None
            if self.truncation is None
            else {"depth": self.depth, "representative": to_dict(self.truncation)},
            "stabilization_index": self.convergence_index,
            "checks": {
                "difference_dims": [dim(x) for x in self.difference_dims],
                **self.checks,
                "level": MODEL_LEVEL,
            },
        }


def _truncate_filtration(x: RingElement, depth: int) -> RingElement:
    """Representative of x modulo ``F^{-depth}`` (drop terms of virtual dimension <= -depth)."""
    return RingElement({m: c for m, c in x.terms.items() if m.dimension > -depth})


def mssp_probe(classes: Sequence[RingElement], depth: int) -> MSSPReport:
    """Cauchy test in the dimension filtration for a sequence of Laurent classes.

    The sequence converges to depth D from index i when every later difference
    lies in ``F^{-D}`` and the difference dimensions keep strictly decreasing
    (or the differences vanish).
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if not classes:
        raise ValueError("mssp_probe needs a nonempty sequence")
    dims = tuple(virtual_dim(b - a) for a, b in zip(classes, classes[1:]))

    def settled(k: int) -> bool:
        if dims[k] > -depth:
            return False
        if k + 1 < len(dims) and not (dims[k + 1] < dims[k] or dims[k + 1] == -math.inf):
            return False
        return True

    index = len(dims)
    while index > 0 and settled(index - 1):
        index -= 1
    if index == len(dims) and dims:
        return MSSPReport(depth, tuple(classes), dims, None, None, {"monotone_tail": False})
    truncation = _truncate_filtration(classes[index], depth)
    return MSSPReport(depth, tuple(classes), dims, index, truncation, {"monotone_tail": True})


def mssp_probe_curve(curve: SymbolicCurve, depth: int, n_max: int | None = None) -> MSSPReport:
    """Probe ``[Sym^n C] / L^n`` (the dual classes of the symmetric powers)."""
    if depth < 1:
        raise ValueError("depth must be positive")
    g = curve.genus
    n_max = n_max if n_max is not None else max(2 * g - 1, 1) + depth + g + 4
    normalized = [sym_class(curve, n).shift_l(-n) for n in range(n_max + 1)]
    dual_ok = all(duality(sym_class(curve, n)) == normalized[n] for n in range(n_max + 1))
    report = mssp_probe(normalized, depth)
    report.checks["duality_matches_normalization"] = dual_ok
    return report


def limit_report(curve: SymbolicCurve, N: int) -> dict:
    """Everything the ``limit`` command certifies, as a JSON-ready dict."""
    sl = sym_limit(curve, N)
    zl = limit_via_zeta(curve, N)
    seq = [sym_class(curve, n) for n in range(2 * curve.genus + N + 4)]
    return {
        "limit": sl.limit.to_dict(),
        "stabilization_index": mod_l_stabilization(seq),
        "checks": {
            "level": MODEL_LEVEL,
            "bound_index": sl.bound_index,
            "sym_stabilization_index": sl.stabilization_index,
            "zeta_tail_start": zl.tail_start,
            **zl.checks,
        },
    }
