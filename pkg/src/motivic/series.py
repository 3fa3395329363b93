"""Power series in ``t`` truncated at a fixed order, over any commutative ring
whose elements support ``+``, ``-``, ``*`` and multiplication by ``int``."""

from __future__ import annotations

from typing import Sequence


class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("series order must be positive")
        if not coeffs:
            raise ValueError("need at least one coefficient to fix the coefficient ring")
        zero = coeffs[0] * 0
        coeffs = coeffs[:order] + [zero] * (order - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @property
    def zero(self):
        return self.coeffs[0] * 0

    def __getitem__(self, n: int):
        if not 0 <= n < self.order:
            raise IndexError(f"coefficient t^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def _align(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        other = self._align(other)
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._align(other))

    def __rsub__(self, other):
        return self._align(other) - self

    def __mul__(self, other):
        other = self._align(other)
        n = min(self.order, other.order)
        out = []
        for k in range(n):
            acc = self.zero
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def mul_poly(self, poly: Sequence) -> TruncatedSeries:
        """Multiply by a polynomial given as little-endian coefficients; keeps the order."""
        out = []
        for k in range(self.order):
            acc = self.zero
            for i, p in enumerate(poly[: k + 1]):
                if p and self.coeffs[k - i]:
                    acc = acc + p * self.coeffs[k - i]
            out.append(acc)
        return TruncatedSeries(out, self.order)

    def truncate(self, n: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[:n], min(n, self.order))

    def map(self, fn) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    def __repr__(self):
        body = " + ".join(f"({c})*t^{i}" for i, c in enumerate(self.coeffs) if c)
        return f"TruncatedSeries({body or '0'} + O(t^{self.order}))"
