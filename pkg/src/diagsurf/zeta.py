"""Zeta functions of diagonal hypersurfaces in factored form.

A zeta function is stored as prod_j (1 - c_j t)^(e_j) with integer c_j and
nonzero integer e_j.  Taking logs, the k-th point count is
N_k = -sum_j e_j c_j^k, so counts come straight from the factors; the same
counts are also recovered from an exact power-series expansion as an
independent check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .counts import DiagonalParams, b_function, pi_size, wolfmann_counts
from .errors import BadParams
from .ff import is_prime
from .series import SeriesQ


@dataclass(frozen=True)
class FactoredRational:
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, pairs) -> FactoredRational:
        """Merge equal c values, drop zero exponents, order by |c| then c."""
        merged: dict[int, int] = {}
        for c, e in pairs:
            merged[c] = merged.get(c, 0) + e
        items = sorted(((c, e) for c, e in merged.items() if e), key=lambda ce: (abs(ce[0]), ce[0]))
        return cls(tuple(items))

    def __mul__(self, other):
        return FactoredRational.build(self.factors + other.factors)

    def __truediv__(self, other):
        return FactoredRational.build(self.factors + tuple((c, -e) for c, e in other.factors))

    def numerator(self):
        return [(c, e) for c, e in self.factors if e > 0]

    def denominator(self):
        return [(c, -e) for c, e in self.factors if e < 0]

    def series(self, K: int) -> SeriesQ:
        """Exact expansion of the product to order K."""
        out = SeriesQ.one(K)
        for c, e in self.factors:
            if e > 0:
                coeffs = [comb(e, j) * (-c) ** j for j in range(K + 1)]
            else:
                coeffs = [comb(-e + j - 1, j) * c**j for j in range(K + 1)]
            out = out * SeriesQ(coeffs, K)
        return out

    def to_json(self) -> dict:
        return {"factors": [{"c": str(c), "e": e} for c, e in self.factors]}

    @classmethod
    def from_json(cls, data) -> FactoredRational:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.build((int(f["c"]), int(f["e"])) for f in data["factors"])

    def __str__(self):
        def term(c, e):
            base = "(1)" if c == 0 else f"(1{'-' if c > 0 else '+'}{abs(c)}t)"
            return base if e == 1 else f"{base}^{e}"

        num = "".join(term(c, e) for c, e in self.numerator()) or "1"
        den = "".join(term(c, e) for c, e in self.denominator())
        return f"{num}/({den})" if den else num


def _check_pr(p, r):
    if not is_prime(p) or r < 1:
        raise BadParams(f"need prime p and r >= 1, got p={p}, r={r}")


def diagonal_zeta(p: int, r: int, d: int, s: int) -> FactoredRational:
    """Zeta function of x_0^d + ... + x_s^d = 0 in P^s over F_q, q = p^(2r)."""
    DiagonalParams(p, r, 1, d)
    if s < 1:
        raise BadParams(f"projective dimension must be >= 1, got {s}")
    q = p ** (2 * r)
    B = b_function(d, s + 1)
    # q^((s-1)/2) = p^(r(s-1))
    middle = p ** (r * (s - 1))
    pairs = [(q**i, -1) for i in range(s)]
    if s % 2 == 0:
        pairs.append((-middle, B))
    else:
        pairs.append((middle, -B))
    return FactoredRational.build(pairs)


def series_counts(Z: FactoredRational, K: int) -> list[int]:
    """[N_1, ..., N_K] read off the factors: N_k = -sum e c^k."""
    if K < 1:
        raise ValueError("K must be >= 1")
    return [-sum(e * c**k for c, e in Z.factors) for k in range(1, K + 1)]


def series_counts_expanded(Z: FactoredRational, K: int) -> list[Fraction]:
    """Same counts via the exact log of the expanded product."""
    return Z.series(K).counts()


def ratio_closed_form(p: int, r: int, d: int, s: int) -> FactoredRational:
    """The closed form claimed for Z_s / Z_{s-1}.

    s even: (1 + q^((s-1)/2) t)^B(d,s+1) (1 - q^((s-2)/2) t)^B(d,s) / (1 - q^(s-1) t)
    s odd:  1 / [(1 - q^(s-1) t) (1 - q^((s-1)/2) t)^B(d,s+1) (1 + q^((s-2)/2) t)^B(d,s)]
    """
    q = p ** (2 * r)
    b_hi, b_lo = b_function(d, s + 1), b_function(d, s)
    hi, lo = p ** (r * (s - 1)), p ** (r * (s - 2))
    if s % 2 == 0:
        pairs = [(-hi, b_hi), (lo, b_lo), (q ** (s - 1), -1)]
    else:
        pairs = [(q ** (s - 1), -1), (hi, -b_hi), (-lo, -b_lo)]
    return FactoredRational.build(pairs)


@dataclass(frozen=True)
class RatioReport:
    p: int
    r: int
    d: int
    s: int
    K: int
    ratio_series: tuple
    class_one_series: tuple
    closed_form_series: tuple

    @property
    def passed(self) -> bool:
        return self.ratio_series == self.class_one_series == self.closed_form_series


def ratio_f_check(p: int, r: int, d: int, s: int, K: int) -> RatioReport:
    """Compare Z_s/Z_{s-1} with exp(sum_k N1(k, s) t^k / k) to order K.

    N1(k, s) is the affine count of x_1^d + ... + x_s^d = b, b in U_n, over
    F_{q^k}: projectively N'(k, s) = N'(k, s-1) + N1(k, s).
    """
    if s < 2:
        raise BadParams(f"need s >= 2, got {s}")
    base = DiagonalParams(p, r, 1, d)
    ratio = diagonal_zeta(p, r, d, s) / diagonal_zeta(p, r, d, s - 1)
    n1 = [wolfmann_counts(base.with_k(k), s).N1 for k in range(1, K + 1)]
    return RatioReport(
        p, r, d, s, K,
        ratio_series=ratio.series(K).coeffs,
        class_one_series=SeriesQ.from_counts(n1).coeffs,
        closed_form_series=ratio_closed_form(p, r, d, s).series(K).coeffs,
    )


def tower_counts(p: int, r: int, s: int, k: int) -> int:
    """Points of x_0^D + ... + x_s^D = 0 in P^s over F_{q^k}, D = p^(rk) + 1."""
    _check_pr(p, r)
    if s < 1 or k < 1:
        raise BadParams(f"need s >= 1 and k >= 1, got s={s}, k={k}")
    Q = p ** (2 * r * k)
    return pi_size(Q, s - 1) + p ** (r * k * (s - 1)) * b_function(p ** (r * k) + 1, s + 1)


def tower_zeta_printed(p: int, r: int, s: int) -> FactoredRational:
    """The growing-degree 'zeta-like' closed form read literally.

    With a = floor(s/2), P(t) = prod_{i=1}^{s-1} (1 - q^i t) (the printed
    upper limit ks-1 taken at k = 1) and P1(t) = prod_{j<a} (1 - p^(r(s+2j)) t):
    s even gives 1 / (P P1^(p-1)); s odd gives P1^(p-1) / ((1 - p^(r(s+2a)) t) P).
    """
    _check_pr(p, r)
    q = p ** (2 * r)
    a = s // 2
    P = [(q**i, 1) for i in range(1, s)]
    P1 = [(p ** (r * (s + 2 * j)), 1) for j in range(a)]
    if s % 2 == 0:
        pairs = [(c, -e) for c, e in P] + [(c, -(p - 1)) for c, _ in P1]
    else:
        pairs = [(c, p - 1) for c, _ in P1] + [(p ** (r * (s + 2 * a)), -1)] + [(c, -e) for c, e in P]
    return FactoredRational.build(pairs)


def tower_zeta_exact(p: int, r: int, s: int) -> FactoredRational:
    """A factored form whose counts reproduce tower_counts for every k.

    With x = p^(rk), B(x+1, s+1) = sum_{j=1}^{s} (-1)^(s-j) x^j, so
    N'_k = sum_{i<s} q^(ik) + sum_{j=1}^{s} (-1)^(s-j) p^(rk(s-1+j)).
    """
    _check_pr(p, r)
    q = p ** (2 * r)
    pairs = [(q**i, -1) for i in range(s)]
    pairs += [(p ** (r * (s - 1 + j)), -((-1) ** (s - j))) for j in range(1, s + 1)]
    return FactoredRational.build(pairs)


@dataclass(frozen=True)
class TowerRow:
    k: int
    oracle: int
    printed: int
    exact: int


def tower_zeta_report(p: int, r: int, s: int, K: int) -> list[TowerRow]:
    """Per-k comparison of tower_counts with the printed and exact closed forms."""
    printed = tower_zeta_printed(p, r, s)
    exact = tower_zeta_exact(p, r, s)
    pc, ec = series_counts(printed, K), series_counts(exact, K)
    return [TowerRow(k, tower_counts(p, r, s, k), pc[k - 1], ec[k - 1]) for k in range(1, K + 1)]
