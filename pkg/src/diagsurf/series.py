"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)


class SeriesQ:
    """c_0 + c_1 t + ... + c_K t^K, everything beyond t^K discarded."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [Fraction(0)] * (order + 1))[: order + 1]
        if not coeffs:
            raise ValueError("empty series")
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        if not isinstance(other, SeriesQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"SeriesQ({[str(c) for c in self.coeffs]})"

    def _check(self, other):
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return SeriesQ([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return SeriesQ([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if not isinstance(other, SeriesQ):
            return SeriesQ([c * other for c in self.coeffs])
        self._check(other)
        K = self.order
        a, b = self.coeffs, other.coeffs
        return SeriesQ([sum((a[i] * b[n - i] for i in range(n + 1)), _ZERO) for n in range(K + 1)])

    __rmul__ = __mul__

    def inverse(self) -> SeriesQ:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [1 / a[0]]
        for n in range(1, self.order + 1):
            out.append(-sum((a[i] * out[n - i] for i in range(1, n + 1)), _ZERO) / a[0])
        return SeriesQ(out)

    def __truediv__(self, other):
        return self * other.inverse()

    def log(self) -> SeriesQ:
        """log of a series with constant term 1."""
        g = self.coeffs
        if g[0] != 1:
            raise ValueError("log needs constant term 1")
        f = [Fraction(0)]
        for n in range(1, self.order + 1):
            acc = sum((k * f[k] * g[n - k] for k in range(1, n)), _ZERO)
            f.append(g[n] - acc / n)
        return SeriesQ(f)

    def exp(self) -> SeriesQ:
        """exp of a series with constant term 0."""
        f = self.coeffs
        if f[0] != 0:
            raise ValueError("exp needs constant term 0")
        g = [Fraction(1)]
        for n in range(1, self.order + 1):
            g.append(sum((k * f[k] * g[n - k] for k in range(1, n + 1)), _ZERO) / n)
        return SeriesQ(g)

    @classmethod
    def from_counts(cls, counts) -> SeriesQ:
        """exp(sum_k N_k t^k / k) for counts = [N_1, ..., N_K]."""
        return cls([0] + [Fraction(N, k) for k, N in enumerate(counts, 1)]).exp()

    def counts(self) -> list[Fraction]:
        """Inverse of from_counts: k-th coefficient of log, times k."""
        lg = self.log()
        return [k * lg[k] for k in range(1, self.order + 1)]
