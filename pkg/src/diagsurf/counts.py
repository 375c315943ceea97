"""Closed-form solution counts for diagonal equations and their identities.

Setting: q = p^(2r), d | p^r + 1, the equation x_1^d + ... + x_s^d = b over
F_{q^k}.  Every power of q with a half-integer exponent is rewritten as an
integer power of p^(rk) = sqrt(q^k), so all arithmetic is exact on Python
ints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParams, InexactDivision
from .ff import is_prime


def b_function(d: int, s: int) -> int:
    """B(d, s) = ((d-1)^s + (-1)^s (d-1)) / d."""
    if d < 2 or s < 0:
        raise BadParams(f"B(d, s) needs d >= 2 and s >= 0, got d={d}, s={s}")
    num = (d - 1) ** s + (-1) ** s * (d - 1)
    value, rem = divmod(num, d)
    assert rem == 0
    return value


def pi_size(Q: int, s: int) -> int:
    """Number of points of projective s-space over F_Q (0 for s = -1)."""
    if s < -1:
        raise BadParams(f"dimension must be >= -1, got {s}")
    return (Q ** (s + 1) - 1) // (Q - 1)


@dataclass(frozen=True)
class DiagonalParams:
    p: int
    r: int
    k: int
    d: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise BadParams(f"p={self.p} is not prime")
        if self.r < 1 or self.k < 1:
            raise BadParams(f"need r >= 1 and k >= 1, got r={self.r}, k={self.k}")
        if self.d < 2:
            raise BadParams(f"need d >= 2, got d={self.d}")
        if (self.p**self.r + 1) % self.d:
            raise BadParams(f"d={self.d} does not divide p^r + 1 = {self.p**self.r + 1}")

    @property
    def q(self) -> int:
        return self.p ** (2 * self.r)

    @property
    def Q(self) -> int:
        """Size q^k of the field the equation is solved over."""
        return self.q**self.k

    @property
    def root(self) -> int:
        """sqrt(q^k) = p^(rk)."""
        return self.p ** (self.r * self.k)

    @property
    def n(self) -> int:
        return (self.Q - 1) // self.d

    @property
    def eta(self) -> int:
        return 1 if self.k % 2 else -1

    def with_k(self, k: int) -> DiagonalParams:
        return DiagonalParams(self.p, self.r, k, self.d)


@dataclass(frozen=True)
class CountTriple:
    """Affine counts for b = 0, b in U_n, and b outside U_n (b != 0)."""

    N0: int
    N1: int
    N2: int


def wolfmann_counts(params: DiagonalParams, s: int) -> CountTriple:
    if s < 2:
        raise BadParams(f"closed-form counts need s >= 2, got s={s}")
    Q, root, eta, d = params.Q, params.root, params.eta, params.d
    B = b_function(d, s)
    main = Q ** (s - 1)
    # q^{k(s/2 - 1)} = root^(s-2)
    scale = root ** (s - 2)
    n0 = main + eta**s * scale * (Q - 1) * B
    n1 = main + eta ** (s + 1) * scale * ((d - 1) ** s * root - (root + eta) * B)
    n2 = main + eta ** (s + 1) * scale * ((-1) ** s * root - (root + eta) * B)
    return CountTriple(n0, n1, n2)


def affine_counts(params: DiagonalParams, s: int) -> CountTriple:
    """Like wolfmann_counts but also defined for one variable.

    With one variable x^d = b has 1 solution for b = 0, d for b in U_n and
    none otherwise.
    """
    if s == 1:
        return CountTriple(1, params.d, 0)
    return wolfmann_counts(params, s)


def projective_count(params: DiagonalParams, s: int) -> int:
    """Points of x_0^d + ... + x_s^d = 0 in P^s over F_{q^k}."""
    if s < 1:
        raise BadParams(f"projective dimension must be >= 1, got {s}")
    n0 = wolfmann_counts(params, s + 1).N0
    value, rem = divmod(n0 - 1, params.Q - 1)
    assert rem == 0
    return value


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self):
        return self.holds


def verify_lemma_22(params: DiagonalParams, s: int) -> IdentityReport:
    """N0(s+1) = N0(s) + (q^k - 1) N1(s)."""
    if s < 2:
        raise BadParams(f"need s >= 2, got {s}")
    cur = wolfmann_counts(params, s)
    nxt = wolfmann_counts(params, s + 1)
    return IdentityReport("lemma 2.2", nxt.N0, cur.N0 + (params.Q - 1) * cur.N1)


def verify_lemma_23(params: DiagonalParams, s: int) -> IdentityReport:
    """q^(ks) = N0 + n N1 + (q^k - 1 - n) N2."""
    if s < 2:
        raise BadParams(f"need s >= 2, got {s}")
    c = wolfmann_counts(params, s)
    n = params.n
    return IdentityReport("lemma 2.3", params.Q**s, c.N0 + n * c.N1 + (params.Q - 1 - n) * c.N2)


def verify_lemma_24(params: DiagonalParams, s: int, i: int) -> IdentityReport:
    """N0(s) = N0(i)N0(s-i) + n N1(i)N1(s-i) + (q^k - 1 - n) N2(i)N2(s-i)."""
    if s < 2 or not 1 <= i <= s - 1:
        raise BadParams(f"need s >= 2 and 1 <= i <= s-1, got s={s}, i={i}")
    a = affine_counts(params, i)
    b = affine_counts(params, s - i)
    n = params.n
    rhs = a.N0 * b.N0 + n * a.N1 * b.N1 + (params.Q - 1 - n) * a.N2 * b.N2
    return IdentityReport(f"lemma 2.4 (i={i})", wolfmann_counts(params, s).N0, rhs)


def _exact(num: int, den: int, what: str) -> int:
    value, rem = divmod(num, den)
    if rem:
        raise InexactDivision(f"{what}: {num} is not divisible by {den}")
    return value


def derive_n1_n2(params: DiagonalParams, s: int, n0_s: int, n0_next: int) -> tuple[int, int]:
    """Recover (N1, N2) for s variables from N0 at s and s+1 variables."""
    Q, n = params.Q, params.n
    n1 = _exact(n0_next - n0_s, Q - 1, "N1")
    n2 = _exact(Q**s - n0_s - n * n1, Q - 1 - n, "N2")
    return n1, n2


@dataclass(frozen=True)
class BoundReport:
    value: int
    bound: int
    deviation: int

    @property
    def slack(self) -> int:
        return self.bound - self.deviation

    @property
    def met(self) -> bool:
        return self.slack >= 0

    @property
    def equality(self) -> bool:
        return self.slack == 0


def weil_deligne_check(params: DiagonalParams, s: int) -> BoundReport:
    """|N' - pi_{s-1}| <= B(d, s+1) (q^k)^((s-1)/2) for the projective count."""
    value = projective_count(params, s)
    deviation = abs(value - pi_size(params.Q, s - 1))
    bound = b_function(params.d, s + 1) * params.root ** (s - 1)
    return BoundReport(value, bound, deviation)


def tss_check(params: DiagonalParams, s: int) -> BoundReport:
    """N' <= d (q^k)^(s-1) + pi_{s-2}."""
    if s < 2:
        raise BadParams(f"need s >= 2, got {s}")
    value = projective_count(params, s)
    bound = params.d * params.Q ** (s - 1) + pi_size(params.Q, s - 2)
    return BoundReport(value, bound, value)
