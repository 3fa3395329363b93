"""Sparse multivariate polynomials with integer coefficients.

Used as targets of the Poincare (one variable ``t``) and Hodge-Deligne
(two variables ``u, v``) measures.
"""

from __future__ import annotations

import math
from types import MappingProxyType
from typing import Mapping


class IntPoly:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent {e} for {nvars}-variable polynomial")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int) -> IntPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def gens(cls, nvars: int) -> tuple[IntPoly, ...]:
        return tuple(
            cls(nvars, {tuple(int(i == j) for j in range(nvars)): 1}) for i in range(nvars)
        )

    @classmethod
    def from_coeffs(cls, coeffs) -> IntPoly:
        """One-variable polynomial from a little-endian coefficient list."""
        return cls(1, {(i,): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        return MappingProxyType(self._terms)

    def _coerce(self, other):
        if isinstance(other, IntPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly.constant(self.nvars, other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return IntPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = IntPoly.constant(self.nvars, 1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, *point):
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} arguments")
        total = 0
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                term *= x ** k
            total += term
        return total

    def degree(self) -> int | float:
        if not self._terms:
            return -math.inf
        return max(sum(e) for e in self._terms)

    def coefficient(self, *exps: int) -> int:
        return self._terms.get(tuple(exps), 0)

    def substitute(self, *values) -> IntPoly:
        """Substitute polynomials (or ints) for each variable."""
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        ref = next((v for v in values if isinstance(v, IntPoly)), None)
        nv = ref.nvars if ref is not None else self.nvars
        total = IntPoly(nv)
        for e, c in self._terms.items():
            term = IntPoly.constant(nv, c)
            for x, k in zip(values, e):
                term = term * (x ** k)
            total = total + term
        return total

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items())

    def __repr__(self):
        return f"IntPoly({self.nvars}, {str(self)!r})"

    def __str__(self):
        names = ("u", "v") if self.nvars == 2 else ("t",) if self.nvars == 1 else tuple(
            f"x{i}" for i in range(self.nvars)
        )
        if not self._terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}*{mono}"
            if i == 0:
                out.append(s if c > 0 else "-" + s)
            else:
                out.append(("+ " if c > 0 else "- ") + s)
        return " ".join(out)


U, V = IntPoly.gens(2)
T = IntPoly.gens(1)[0]


def uv_valuation(p: IntPoly) -> int | float:
    """Largest k with (uv)^k dividing p; ``math.inf`` for zero."""
    if p.nvars != 2:
        raise ValueError("uv-adic valuation needs a polynomial in u, v")
    if not p:
        return math.inf
    return min(min(i, j) for i, j in p.terms)


def uv_to_dict(p: IntPoly) -> dict:
    if p.nvars != 2:
        raise ValueError("only two-variable polynomials use the uv serialization")
    return {"uv_terms": [{"u": i, "v": j, "coeff": c} for (i, j), c in p.sorted_terms()]}


def uv_from_dict(data: Mapping) -> IntPoly:
    return IntPoly(2, {(t["u"], t["v"]): t["coeff"] for t in data["uv_terms"]})


def t_to_list(p: IntPoly) -> list[int]:
    if p.nvars != 1:
        raise ValueError("expected a one-variable polynomial")
    if not p:
        return []
    d = int(p.degree())
    return [p.coefficient(i) for i in range(d + 1)]
