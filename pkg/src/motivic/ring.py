"""Free model of the Grothendieck ring of varieties with the Lefschetz class inverted.

Elements are integer combinations of monomials in named generators (classes of
smooth proper varieties) times a power of ``L``, the class of the affine line.
No relations beyond the ring axioms are imposed, so any identity verified here
is a symbolic certificate rather than a definitional truth.

    >>> C = Generator("C", 1)
    >>> x = (1 + L) * (1 + L)
    >>> str(x)
    '1 + 2*L + L^2'
    >>> v_L(L**3)
    3
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .polys import IntPoly

__all__ = [
    "Generator",
    "GeneratorRegistry",
    "MeasureData",
    "Monomial",
    "RingElement",
    "L",
    "ONE",
    "ZERO",
    "add",
    "mul",
    "gen",
    "lefschetz_power",
    "projective_class",
    "v_L",
    "mod_l_power",
    "virtual_dim",
    "duality",
    "BlowupCertificate",
    "blowup_compatibility_check",
    "to_json",
    "from_json",
    "to_dict",
    "from_dict",
]


@dataclass(frozen=True)
class MeasureData:
    """Cohomological data attached to a generator, consumed by motivic measures.

    ``point_counts[m-1]`` is the number of points over the degree-``m``
    extension of the base field.  ``e_polynomial`` is a polynomial in ``u, v``
    and ``poincare_polynomial`` a polynomial in ``t``.
    """

    point_counts: tuple[int, ...] | None = None
    e_polynomial: IntPoly | None = None
    poincare_polynomial: IntPoly | None = None

    def __post_init__(self):
        if self.point_counts is not None:
            object.__setattr__(self, "point_counts", tuple(int(n) for n in self.point_counts))
            if any(n < 0 for n in self.point_counts):
                raise ValueError("point counts must be non-negative")
        if self.e_polynomial is not None and self.e_polynomial.nvars != 2:
            raise ValueError("e_polynomial must be a polynomial in two variables u, v")
        if self.poincare_polynomial is not None and self.poincare_polynomial.nvars != 1:
            raise ValueError("poincare_polynomial must be a polynomial in one variable t")


@dataclass(frozen=True)
class Generator:
    """A named class of a variety, usually smooth and proper.

    Identity is (name, dim, smooth, proper); attached measure data does not take
    part in equality, so re-decorating a generator with data keeps it equal.
    """

    name: str
    dim: int
    smooth: bool = True
    proper: bool = True
    data: MeasureData | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError("generator name must be a non-empty string")
        if int(self.dim) != self.dim or self.dim < 0:
            raise ValueError(f"generator {self.name!r}: dim must be a non-negative integer")
        d = self.data
        if d is None:
            return
        if d.e_polynomial is not None:
            for (i, j) in d.e_polynomial.terms:
                if i + j > 2 * self.dim:
                    raise ValueError(
                        f"generator {self.name!r}: E-polynomial term u^{i} v^{j} exceeds degree 2*dim"
                    )
        if d.e_polynomial is not None and d.poincare_polynomial is not None:
            if d.e_polynomial(1, 1) != d.poincare_polynomial(-1):
                raise ValueError(
                    f"generator {self.name!r}: E(1,1) disagrees with the Poincare polynomial at -1"
                )

    def with_data(self, data: MeasureData) -> Generator:
        return Generator(self.name, self.dim, self.smooth, self.proper, data)

    def element(self) -> RingElement:
        return gen(self)


class GeneratorRegistry:
    """Name -> generator lookup; names are unique within one registry."""

    def __init__(self, generators: Iterable[Generator] = ()):
        self._by_name: dict[str, Generator] = {}
        for g in generators:
            self.add(g)

    def add(self, g: Generator) -> Generator:
        old = self._by_name.get(g.name)
        if old is not None and old != g:
            raise ValueError(f"generator name {g.name!r} already registered with different type")
        if old is None or (old.data is None and g.data is not None):
            self._by_name[g.name] = g
        return self._by_name[g.name]

    def __getitem__(self, name: str) -> Generator:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def __iter__(self):
        return iter(sorted(self._by_name.values(), key=lambda g: g.name))

    def __len__(self) -> int:
        return len(self._by_name)

    @classmethod
    def of(cls, *elements: RingElement) -> GeneratorRegistry:
        reg = cls()
        for x in elements:
            for g in x.generators():
                reg.add(g)
        return reg


@dataclass(frozen=True, order=False)
class Monomial:
    """Product of generator powers times ``L**l``; ``gens`` is sorted by name."""

    gens: tuple[tuple[Generator, int], ...] = ()
    l: int = 0

    @staticmethod
    def make(exponents: Mapping[Generator, int], l: int = 0) -> Monomial:
        items = []
        names = set()
        for g, e in exponents.items():
            if e < 0:
                raise ValueError("generator exponents must be non-negative")
            if e == 0:
                continue
            if g.name in names:
                raise ValueError(f"two distinct generators share the name {g.name!r}")
            names.add(g.name)
            items.append((g, int(e)))
        items.sort(key=lambda ge: ge[0].name)
        return Monomial(tuple(items), int(l))

    def sort_key(self):
        return (tuple((g.name, e) for g, e in self.gens), self.l)

    def __mul__(self, other: Monomial) -> Monomial:
        if not self.gens:
            return Monomial(other.gens, self.l + other.l)
        if not other.gens:
            return Monomial(self.gens, self.l + other.l)
        merged: dict[str, list] = {g.name: [g, e] for g, e in self.gens}
        for g, e in other.gens:
            slot = merged.get(g.name)
            if slot is None:
                merged[g.name] = [g, e]
            elif slot[0] != g:
                raise ValueError(f"two distinct generators share the name {g.name!r}")
            else:
                slot[1] += e
        return Monomial(tuple((g, e) for _, (g, e) in sorted(merged.items())), self.l + other.l)

    @property
    def gen_dim(self) -> int:
        return sum(g.dim * e for g, e in self.gens)

    @property
    def dimension(self) -> int:
        return self.gen_dim + self.l

    def __str__(self) -> str:
        parts = [f"[{g.name}]" + (f"^{e}" if e != 1 else "") for g, e in self.gens]
        if self.l:
            parts.append("L" if self.l == 1 else f"L^{self.l}")
        return "*".join(parts) if parts else "1"


def _coerce(x) -> RingElement:
    if isinstance(x, RingElement):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        return NotImplemented
    return RingElement({Monomial(): x}) if x else ZERO


class RingElement:
    """Immutable integer combination of monomials, kept in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = int(c)
            if c:
                clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> RingElement:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def generators(self) -> set[Generator]:
        return {g for m in self._terms for g, _ in m.gens}

    def is_laurent(self) -> bool:
        return any(m.l < 0 for m in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> RingElement:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return RingElement._raw(out)

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        return RingElement._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> RingElement:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RingElement:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> RingElement:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return RingElement._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RingElement:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) == 1:
                (m, c), = self._terms.items()
                if c in (1, -1) and not m.gens:
                    return RingElement._raw({Monomial((), m.l * n): c ** (-n)})
            raise ValueError("only signed powers of L can be inverted")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_l(self, k: int) -> RingElement:
        """Multiply by ``L**k`` (``k`` may be negative)."""
        return RingElement._raw({Monomial(m.gens, m.l + k): c for m, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"RingElement({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            body = str(m)
            if body == "1":
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            if i == 0:
                out.append(s if c > 0 else "-" + s)
            else:
                out.append(("+ " if c > 0 else "- ") + s)
        return " ".join(out)


ZERO = RingElement._raw({})
ONE = RingElement._raw({Monomial(): 1})
L = RingElement._raw({Monomial((), 1): 1})


def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def gen(g: Generator, exponent: int = 1) -> RingElement:
    return RingElement._raw({Monomial.make({g: exponent}): 1})


def lefschetz_power(k: int) -> RingElement:
    return RingElement._raw({Monomial((), k): 1})


def projective_class(n: int) -> RingElement:
    """Class of projective n-space, ``1 + L + ... + L**n``; zero for ``n == -1``."""
    if n < -1:
        raise ValueError("projective_class needs n >= -1")
    return RingElement._raw({Monomial((), i): 1 for i in range(n + 1)})


def _require_polynomial(x: RingElement, what: str) -> None:
    if x.is_laurent():
        raise ValueError(f"{what} undefined on Laurent elements")


def v_L(x: RingElement) -> int | float:
    """Largest n with x in the ideal (L^n); ``math.inf`` for zero."""
    _require_polynomial(x, "valuation")
    if not x:
        return math.inf
    return min(m.l for m in x.terms)


def mod_l_power(x: RingElement, N: int) -> RingElement:
    """Reduce modulo ``L**N`` by dropping every term with L-exponent >= N."""
    if N < 1:
        raise ValueError("mod_l_power needs N >= 1")
    _require_polynomial(x, "reduction mod L^N")
    return RingElement._raw({m: c for m, c in x.terms.items() if m.l < N})


def virtual_dim(x: RingElement) -> int | float:
    """Dimension-filtration degree: x lies in F^i exactly when virtual_dim(x) <= i."""
    if not x:
        return -math.inf
    return max(m.dimension for m in x.terms)


def duality(x: RingElement) -> RingElement:
    """The involution sending a smooth proper generator X to X / L^dim X and L to 1/L."""
    out = {}
    for m, c in x.terms.items():
        for g, _ in m.gens:
            if not (g.smooth and g.proper):
                raise ValueError(f"duality requires smooth proper generators; {g.name!r} is not")
        out[Monomial(m.gens, -m.l - m.gen_dim)] = c
    return RingElement._raw(out)


@dataclass(frozen=True)
class BlowupCertificate:
    dim_x: int
    dim_y: int
    chain: tuple[RingElement, ...]
    links: tuple[bool, ...]
    homomorphism_agrees: bool

    @property
    def ok(self) -> bool:
        return all(self.links) and self.homomorphism_agrees

    def __bool__(self) -> bool:
        return self.ok


def blowup_compatibility_check(dim_x: int, dim_y: int) -> BlowupCertificate:
    """Check that duality respects the blow-up relation Bl - E = X - Y.

    With fresh generators X and Y, the exceptional divisor is the projective
    bundle E = Y * P^(c-1) (c the codimension) and Bl = X - Y + E.  Each line of
    the chain below is computed independently and compared with the next; all
    lines are multiplied through by L^dim_x.
    """
    if dim_x < 1 or dim_y < 0:
        raise ValueError("need dim_x >= 1 and dim_y >= 0")
    if dim_y >= dim_x:
        raise ValueError("the blown-up center must have smaller dimension (dim_y < dim_x)")
    X = gen(Generator("X", dim_x))
    Y = gen(Generator("Y", dim_y))
    c = dim_x - dim_y
    E = Y * projective_class(c - 1)
    Bl = X - Y + E
    # smooth proper rule D([Z]) = [Z] / L^dim Z, applied to Bl (dim_x) and E (dim_x - 1)
    d_bl = Bl.shift_l(-dim_x)
    d_e = E.shift_l(-(dim_x - 1))
    d_x = X.shift_l(-dim_x)
    d_y = Y.shift_l(-dim_y)
    chain = (
        (d_bl - d_e).shift_l(dim_x),
        Bl - L * E,
        X - Y + E - L * E,
        X - Y + (1 - L) * projective_class(c - 1) * Y,
        X - Y + (1 - lefschetz_power(c)) * Y,
        X - lefschetz_power(c) * Y,
        (d_x - d_y).shift_l(dim_x),
    )
    links = tuple(a == b for a, b in zip(chain, chain[1:]))
    agrees = duality(Bl) - duality(E) == duality(X) - duality(Y) == d_bl - d_e
    return BlowupCertificate(dim_x, dim_y, chain, links, agrees)


def to_dict(x: RingElement) -> dict:
    return {
        "terms": [
            {"coeff": c, "l": m.l, "gens": {g.name: e for g, e in m.gens}}
            for m, c in x.sorted_terms()
        ]
    }


def from_dict(data: Mapping, registry: GeneratorRegistry | Mapping[str, Generator]) -> RingElement:
    out: dict[Monomial, int] = {}
    for t in data["terms"]:
        exps = {registry[name]: int(e) for name, e in t["gens"].items()}
        m = Monomial.make(exps, int(t["l"]))
        if m in out:
            raise ValueError("duplicate monomial in serialized element")
        if int(t["coeff"]) == 0:
            raise ValueError("zero coefficient in serialized element")
        out[m] = int(t["coeff"])
    return RingElement._raw(out)


def to_json(x: RingElement) -> str:
    return json.dumps(to_dict(x), separators=(",", ":"))


def from_json(text: str, registry: GeneratorRegistry | Mapping[str, Generator]) -> RingElement:
    return from_dict(json.loads(text), registry)
