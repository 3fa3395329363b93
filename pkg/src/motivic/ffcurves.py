"""Finite fields, point counts of odd-degree hyperelliptic curves, Weil zeta functions.

Field elements of ``F_{p^k}`` are ints in ``[0, p^k)``: the base-p digits are the
coefficients (little-endian) of a polynomial reduced modulo the field's
modulus, the lexicographically smallest monic irreducible polynomial of degree
k.  Bulk enumeration runs in numpy on digit arrays; the scalar methods are the
reference arithmetic.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, CertificateError
from .kapranov import SymbolicCurve
from .polygons import Polygon, equals, hodge_polygon, lies_above, newton_polygon
from .ring import MeasureData

__all__ = [
    "DEFAULT_BUDGET",
    "FiniteField",
    "HyperCurve",
    "WeilZeta",
    "QNewtonReport",
    "count_points",
    "zeta_from_counts",
    "jacobian_order",
    "class_number_check",
    "q_newton_vs_hodge",
    "q_valuation",
    "curve_with_counts",
    "curve_report",
    "enumeration_budget",
    "is_prime",
    "is_irreducible",
    "smallest_irreducible",
]

DEFAULT_BUDGET = 10 ** 7
_CHUNK = 1 << 18


def enumeration_budget() -> int:
    raw = os.environ.get("MOTIVIC_BUDGET")
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"MOTIVIC_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("MOTIVIC_BUDGET must be positive")
    return value


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def prime_power(q: int) -> tuple[int, int]:
    """``(p, k)`` with ``q == p**k``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, isqrt(q) + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                break
            return p, k
    else:
        return q, 1
    raise ValueError("not a prime power")


# polynomials over F_p as little-endian lists without trailing zeros

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    """Remainder of a modulo f over F_p."""
    a = [c % p for c in a]
    f = _trim([c % p for c in f])
    if not f:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(f[-1], p - 2, p)
    df = len(f) - 1
    a = _trim(a)
    while len(a) - 1 >= df:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        a = _trim(a)
    return a


def _pgcd(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _pderiv(a, p):
    return _trim([(i * c) % p for i, c in enumerate(a)][1:])


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of a polynomial over F_p: no roots, then trial division by
    every monic polynomial of degree 2 .. deg/2."""
    f = _trim([c % p for c in f])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if any(sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0 for x in range(p)):
        return False
    for d in range(2, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _pmod(f, list(low) + [1], p):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Candidates ``x^k + c_{k-1} x^{k-1} + ... + c_0`` are ordered by
    ``(c_{k-1}, ..., c_0)``.
    """
    if k == 1:
        return (0, 1)
    for high_first in itertools.product(range(p), repeat=k):
        f = list(reversed(high_first)) + [1]
        if f[0] == 0:
            continue
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


class FiniteField:
    """``F_q`` with ``q = p^k``."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        self.p, self.k = p, k
        self.q = p ** k
        self.modulus = smallest_irreducible(p, k)
        self._squares = None
        self._logs = None

    def __repr__(self):
        return f"FiniteField({self.p}, {self.k})"

    # scalar arithmetic on int encodings

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def encode(self, digits: Sequence[int]) -> int:
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(digits))

    def add(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        return self.encode([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        r = _pmod(prod, self.modulus, self.p)
        return self.encode(r + [0] * (self.k - len(r)))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def quadratic_character(self, a: int) -> int:
        """Euler's criterion ``a^((q-1)/2)``."""
        if a == 0:
            return 0
        r = self.pow(a, (self.q - 1) // 2)
        if r == 1:
            return 1
        if r == self.encode([self.p - 1]):
            return -1
        raise AssertionError("Euler criterion produced neither 1 nor -1")

    def embed_prime(self, c: int) -> int:
        return c % self.p

    def _factor(self, n: int) -> list[int]:
        out, d = [], 2
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            out.append(n)
        return out

    def primitive_element(self) -> int:
        """Smallest encoding (>= 1) of a generator of the multiplicative group."""
        n = self.q - 1
        primes = self._factor(n)
        for c in range(1, self.q):
            if all(self.pow(c, n // r) != 1 for r in primes):
                return c
        raise AssertionError("multiplicative group has no generator")  # cannot happen

    # vectorized arithmetic

    def _mul_matrix(self, h: int) -> np.ndarray:
        # row i: digits of x^i * h, so digits(a) @ M == digits(a * h) mod p
        return np.array([self.digits(self.mul(self.p ** i, h)) for i in range(self.k)], dtype=np.float64)

    def log_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """``(log, antilog)`` for a fixed primitive element; ``log[0] == -1``.

        Built blockwise: block j is the base block ``g^0 .. g^{B-1}`` multiplied by
        ``g^{jB}``, a linear map on digit vectors.
        """
        if self._logs is not None:
            return self._logs
        p, k, n = self.p, self.k, self.q - 1
        g = self.primitive_element()
        B = min(n, _CHUNK)
        base = np.zeros((1, k), dtype=np.float64)
        base[0, 0] = 1
        while base.shape[0] < B:
            step = self._mul_matrix(self.pow(g, base.shape[0]))
            base = np.vstack([base, np.mod(base @ step, p)])
        base = base[:B]
        powers = np.array([p ** i for i in range(k)], dtype=np.int64)
        antilog = np.empty(n, dtype=np.int64)
        for j in range(0, n, B):
            block = np.mod(base @ self._mul_matrix(self.pow(g, j)), p).astype(np.int64)
            antilog[j : j + B] = (block @ powers)[: n - j]
        log = np.full(self.q, -1, dtype=np.int64)
        log[antilog] = np.arange(n, dtype=np.int64)
        if np.count_nonzero(log < 0) != 1 or log[0] != -1:
            raise AssertionError("discrete log table is not a bijection")
        self._logs = (log, antilog)
        return self._logs

    def quadratic_character_array(self, a: np.ndarray) -> np.ndarray:
        """Vectorized quadratic character: parity of the discrete log (0 at 0)."""
        if self.k == 1:
            sq = self._square_table()
            return np.where(a == 0, 0, np.where(sq[a], 1, -1))
        log, _ = self.log_tables()
        la = log[a]
        return np.where(la < 0, 0, 1 - 2 * (la & 1))

    def _square_table(self) -> np.ndarray:
        if self._squares is None:
            table = np.zeros(self.p, dtype=bool)
            for start in range(1, self.p, _CHUNK):
                x = np.arange(start, min(start + _CHUNK, self.p), dtype=np.int64)
                table[(x * x) % self.p] = True
            self._squares = table
        return self._squares

    def eval_prime_poly(self, f: Sequence[int], start: int, stop: int) -> np.ndarray:
        """Values of f (coefficients in F_p) at the elements encoded start..stop-1."""
        p = self.p
        x = np.arange(start, stop, dtype=np.int64)
        acc = np.full(x.shape, f[-1] % p, dtype=np.int64)
        if self.k == 1:
            for c in reversed(f[:-1]):
                acc = (acc * x + c) % p
            return acc
        log, antilog = self.log_tables()
        n = self.q - 1
        lx = log[x]
        for c in reversed(f[:-1]):
            la = log[acc]
            prod = antilog[(la + lx) % n]
            acc = np.where((la < 0) | (lx < 0), 0, prod)
            low = acc % p
            acc = acc - low + (low + c) % p
        return acc


@lru_cache(maxsize=4)
def _field(p: int, k: int) -> FiniteField:
    return FiniteField(p, k)


@dataclass(frozen=True)
class HyperCurve:
    """``y^2 = f(x)`` with f of odd degree 2g+1 over F_p, viewed over ``F_q``, ``q = p^k``.

    Coefficients of f are little-endian residues mod p.  The odd degree gives a
    single rational point at infinity on the smooth model.
    """

    p: int
    k: int
    f: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported")
        if self.k < 1:
            raise ValueError("extension degree must be positive")
        f = tuple(_trim([int(c) % self.p for c in self.f]))
        if len(f) - 1 < 3 or (len(f) - 1) % 2 == 0:
            raise ValueError(f"f must have odd degree >= 3 mod {self.p}, got degree {len(f) - 1}")
        if len(_pgcd(list(f), _pderiv(list(f), self.p), self.p)) > 1:
            raise ValueError("f is not squarefree (the curve is singular)")
        object.__setattr__(self, "f", f)

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def genus(self) -> int:
        return (len(self.f) - 2) // 2

    def field(self, m: int = 1) -> FiniteField:
        return _field(self.p, self.k * m)


def count_points(curve: HyperCurve, m: int = 1, budget: int | None = None) -> int:
    """Number of points over ``F_{q^m}`` of the smooth projective model."""
    if m < 1:
        raise ValueError("extension degree m must be positive")
    Q = curve.q ** m
    budget = enumeration_budget() if budget is None else budget
    if Q > budget:
        raise BudgetExceeded(Q, budget)
    F = curve.field(m)
    total = 0
    for start in range(0, Q, _CHUNK):
        vals = F.eval_prime_poly(curve.f, start, min(start + _CHUNK, Q))
        total += int(F.quadratic_character_array(vals).sum())
    return 1 + Q + total


def _poly_eval(coeffs, x):
    return sum(c * x ** i for i, c in enumerate(coeffs))


def _p_from_power_sums(s: Sequence[int], degree: int) -> list[Fraction]:
    """Coefficients of ``exp(-sum s_m t^m / m)`` through ``t^degree``: k p_k = -sum s_i p_{k-i}."""
    p = [Fraction(1)]
    for k in range(1, degree + 1):
        p.append(-sum(Fraction(s[i - 1]) * p[k - i] for i in range(1, k + 1)) / k)
    return p


@dataclass(frozen=True)
class WeilZeta:
    """``zeta(t) = P(t) / ((1-t)(1-qt))`` for a genus-g curve over ``F_q``."""

    q: int
    g: int
    counts: tuple[int, ...]
    P: tuple[int, ...]

    def __post_init__(self):
        if len(self.P) != 2 * self.g + 1:
            raise ValueError("numerator must have degree exactly 2g")
        if self.P[0] != 1:
            raise ValueError("numerator must satisfy P(0) = 1")
        if not self.functional_equation_ok():
            raise ValueError("numerator violates the functional equation")

    def functional_equation_ok(self) -> bool:
        """``P(t) = q^g t^{2g} P(1/(qt))``, i.e. ``p_{2g-i} = q^{g-i} p_i``."""
        g, P = self.g, self.P
        return all(P[2 * g - i] * self.q ** i == self.q ** g * P[i] for i in range(2 * g + 1))

    def power_sums(self, n: int) -> list[int]:
        """``s_m = sum of alpha_i^m`` over the inverse roots, for m = 1..n."""
        P = list(self.P) + [0] * max(0, n - 2 * self.g)
        s: list[int] = []
        for k in range(1, n + 1):
            s.append(-k * P[k] - sum(s[i - 1] * P[k - i] for i in range(1, k)))
        return s

    def predict_counts(self, n: int) -> list[int]:
        return [self.q ** m + 1 - s for m, s in enumerate(self.power_sums(n), start=1)]

    def extension(self, m: int) -> WeilZeta:
        """The same curve over ``F_{q^m}``."""
        s_all = self.power_sums(m * 2 * self.g)
        s = [s_all[m * j - 1] for j in range(1, 2 * self.g + 1)]
        P = _p_from_power_sums(s, 2 * self.g)
        if any(c.denominator != 1 for c in P):
            raise AssertionError("non-integral numerator over an extension")
        counts = tuple(self.predict_counts(m * self.g)[m - 1 :: m]) if self.g else ()
        return WeilZeta(self.q ** m, self.g, counts, tuple(int(c) for c in P))

    def zeta_coefficients(self, n: int) -> list[int]:
        """First n coefficients of ``zeta(t)``, i.e. ``#Sym^j X(F_q)``."""
        # 1/((1-t)(1-qt)) = sum (1 + q + ... + q^j) t^j
        geo = [(self.q ** (j + 1) - 1) // (self.q - 1) for j in range(n)]
        return [
            sum(self.P[i] * geo[j - i] for i in range(min(j, 2 * self.g) + 1)) for j in range(n)
        ]

    def evaluate(self, t) -> Fraction:
        return Fraction(_poly_eval(self.P, Fraction(t)))

    def to_dict(self) -> dict:
        return {"q": self.q, "g": self.g, "counts": list(self.counts), "P": list(self.P)}


def zeta_from_counts(q: int, g: int, counts: Sequence[int]) -> WeilZeta:
    """Reconstruct P(t) from ``N_1..N_g``; extra counts are checked against the prediction."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    counts = tuple(int(n) for n in counts)
    if len(counts) < g:
        raise ValueError(f"need {g} point counts, got {len(counts)}")
    s = [q ** m + 1 - counts[m - 1] for m in range(1, g + 1)]
    low = _p_from_power_sums(s, g)
    if any(c.denominator != 1 for c in low):
        raise ValueError("counts inconsistent with a genus-g curve")
    low = [int(c) for c in low]
    P = low + [q ** (g - i) * low[i] for i in range(g - 1, -1, -1)]
    try:
        z = WeilZeta(q, g, counts[:g], tuple(P))
    except ValueError as exc:
        raise ValueError(f"counts inconsistent with a genus-g curve: {exc}") from None
    if len(counts) > g and z.predict_counts(len(counts))[g:] != list(counts[g:]):
        raise ValueError("counts inconsistent with a genus-g curve")
    if _poly_eval(P, 1) <= 0:
        raise ValueError("counts inconsistent with a genus-g curve: P(1) <= 0")
    return z


def jacobian_order(z: WeilZeta) -> int:
    return _poly_eval(z.P, 1)


def class_number_check(z: WeilZeta) -> bool:
    """Compare ``(1-t) zeta(t)`` at ``t = 1`` computed two ways.

    Rational form: ``P(1) / (1 - q)``.  Series form: the coefficients ``d_n`` of
    ``(1-t) zeta(t)`` become geometric, ``d_n = #Jac * q^{n-g}``, from n = 2g on;
    the finite head plus the summed geometric tail must give the same number.
    """
    q, g = z.q, z.g
    order = jacobian_order(z)
    rational = Fraction(order, 1 - q)
    M = 2 * g
    c = z.zeta_coefficients(M + 6)
    d = [c[0]] + [c[n] - c[n - 1] for n in range(1, len(c))]
    if any(d[n + 1] != q * d[n] for n in range(M, M + 5)):
        return False
    if d[M] != order * q ** g:
        return False
    series = sum(Fraction(x) for x in d[:M]) + Fraction(d[M], 1 - q)
    return series == rational


def q_valuation(n: int, q: int) -> Fraction | float:
    """``v_p(n) / k`` for ``q = p^k``; ``inf`` for zero."""
    if n == 0:
        return float("inf")
    p, k = prime_power(q)
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return Fraction(v, k)


@dataclass(frozen=True)
class QNewtonReport:
    newton: Polygon
    hodge: Polygon
    lies_above: bool
    equals: bool

    @property
    def ordinary(self) -> bool:
        return self.equals

    def gap(self, x) -> Fraction:
        return self.newton(x) - self.hodge(x)


def q_newton_vs_hodge(z: WeilZeta) -> QNewtonReport:
    if z.g < 1:
        raise ValueError("the Hodge polygon needs genus >= 1")
    newton = newton_polygon([(i, q_valuation(c, z.q)) for i, c in enumerate(z.P)])
    hodge = hodge_polygon([z.g, z.g])
    above = lies_above(newton, hodge)
    if not above:
        raise CertificateError("q-Newton polygon dips below the Hodge polygon", newton)
    return QNewtonReport(newton, hodge, above, equals(newton, hodge))


def curve_with_counts(z: WeilZeta, extensions: int = 1, label: str = "C") -> SymbolicCurve:
    """Symbolic curve whose generators carry point counts over ``F_{q^m}``, m <= extensions.

    ``C`` gets ``N_m``, ``Jac`` gets ``P_m(1)`` and each free ``Sym^k`` gets the
    t^k coefficient of the zeta function over ``F_{q^m}``.
    """
    g = z.g
    ext = [z.extension(m) for m in range(1, extensions + 1)]
    c_counts = z.predict_counts(extensions)
    data: dict[object, MeasureData] = {
        "C": MeasureData(point_counts=c_counts),
        "Jac": MeasureData(point_counts=[jacobian_order(e) for e in ext]),
    }
    zc = [e.zeta_coefficients(2 * g) for e in ext]
    for k in range(2, 2 * g - 2):
        data[k] = MeasureData(point_counts=[row[k] for row in zc])
    return SymbolicCurve(g, label, data)


def curve_report(curve: HyperCurve, budget: int | None = None) -> dict:
    """Count, reconstruct and certify; also re-predicts N_m for m in (g, g+2] when affordable."""
    budget = enumeration_budget() if budget is None else budget
    g, q = curve.genus, curve.q
    counts = [count_points(curve, m, budget) for m in range(1, g + 1)]
    z = zeta_from_counts(q, g, counts)
    cmp = q_newton_vs_hodge(z)
    predicted = z.predict_counts(g + 2)
    checks = []
    for m in range(g + 1, g + 3):
        if q ** m <= budget:
            checks.append({"m": m, "predicted": predicted[m - 1], "counted": count_points(curve, m, budget)})
    return {
        "q": q,
        "g": g,
        "counts": counts,
        "P": list(z.P),
        "jacobian_order": jacobian_order(z),
        "class_number_ok": class_number_check(z),
        "functional_equation_ok": z.functional_equation_ok(),
        "newton": cmp.newton.to_dict(),
        "hodge": cmp.hodge.to_dict(),
        "lies_above": cmp.lies_above,
        "equals": cmp.equals,
        "prediction_checks": checks,
    }
