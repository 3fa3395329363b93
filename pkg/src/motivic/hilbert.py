"""Hilbert schemes of points on a smooth projective surface via Goettsche's formula

    [Hilb^n S] = sum over partitions a of n of  L^(n - |a|) * prod_i [Sym^(a_i) S]

where ``a = (1^a_1, 2^a_2, ...)`` and ``|a| = a_1 + a_2 + ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .measures import macdonald_sym_e_series, poincare_from_e
from .polys import U, V, IntPoly
from .ring import ONE, Generator, MeasureData, RingElement, gen, lefschetz_power, mod_l_power

__all__ = [
    "Partition",
    "partitions",
    "SymbolicSurface",
    "SURFACE_E_POLYNOMIALS",
    "hilb_summands",
    "hilb_class",
    "hilb_mod_l_check",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be positive and non-increasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @cached_property
    def multiplicities(self) -> tuple[int, ...]:
        """``(a_1, ..., a_n)`` where ``a_i`` counts the parts equal to i."""
        a = [0] * self.n
        for p in self.parts:
            a[p - 1] += 1
        return tuple(a)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "(" + " ".join(
            f"{i}^{a}" for i, a in enumerate(self.multiplicities, start=1) if a
        ) + ")"


def partitions(n: int) -> list[Partition]:
    """All partitions of n, in descending lexicographic order of their parts."""
    if n < 1:
        raise ValueError("partitions needs n >= 1")
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


SURFACE_E_POLYNOMIALS: dict[str, IntPoly] = {
    "P2": 1 + U * V + U ** 2 * V ** 2,
    "P1xP1": 1 + 2 * U * V + U ** 2 * V ** 2,
    "K3": 1 + U ** 2 + 20 * U * V + V ** 2 + U ** 2 * V ** 2,
    "abelian": (1 - U) ** 2 * (1 - V) ** 2,
}


class SymbolicSurface:
    """Free symbols ``[Sym^k S]`` of dimension 2k, with ``Sym^1 = S``.

    When an E-polynomial is given, each symbol carries the Macdonald
    E-polynomial of the symmetric power.
    """

    def __init__(self, label: str = "S", e_polynomial: IntPoly | None = None):
        self.label = label
        self.e_polynomial = e_polynomial
        self._gens: dict[int, Generator] = {}

    def generator(self, k: int) -> Generator:
        if k < 1:
            raise ValueError("symmetric powers are indexed by k >= 1")
        if k not in self._gens:
            name = self.label if k == 1 else f"Sym^{k}({self.label})"
            data = None
            if self.e_polynomial is not None:
                e = macdonald_sym_e_series(self.e_polynomial, k + 1)[k]
                data = MeasureData(e_polynomial=e, poincare_polynomial=poincare_from_e(e))
            self._gens[k] = Generator(name, 2 * k, data=data)
        return self._gens[k]

    def sym(self, k: int) -> RingElement:
        return ONE if k == 0 else gen(self.generator(k))

    def sym_classes(self, n: int) -> dict[int, RingElement]:
        return {k: self.sym(k) for k in range(n + 1)}


def hilb_summands(
    surface_syms: Mapping[int, RingElement], n: int
) -> list[tuple[Partition, RingElement]]:
    """One summand ``L^(n-|a|) prod [Sym^(a_i) S]`` per partition of n."""
    out = []
    for part in partitions(n):
        term = lefschetz_power(n - part.length)
        for a in part.multiplicities:
            if a == 0:
                continue
            if a not in surface_syms:
                raise ValueError(f"missing class of Sym^{a} S")
            term = term * surface_syms[a]
        out.append((part, term))
    return out


def hilb_class(surface_syms: Mapping[int, RingElement], n: int) -> RingElement:
    total = RingElement()
    for _, term in hilb_summands(surface_syms, n):
        total = total + term
    return total


def hilb_mod_l_check(n: int, surface: SymbolicSurface | None = None) -> bool:
    """``[Hilb^n S] == [Sym^n S]`` modulo L."""
    if n < 1:
        raise ValueError("hilb_mod_l_check needs n >= 1")
    surface = surface or SymbolicSurface()
    diff = hilb_class(surface.sym_classes(n), n) - surface.sym(n)
    return not mod_l_power(diff, 1)
