"""Brute-force oracles for diagonal equations.

Nothing here uses a closed form: counts come from literal loops, from
additive convolution of the one-variable solution profile, or from scanning
every normalized point of projective space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import SizeExceeded
from .ff import FieldCtx, dth_roots, unit_group

PROFILE_MAX_FIELD = 4096
NAIVE_MAX = 2**26
SCAN_MAX = 2**20


@dataclass(frozen=True)
class PointMatrix:
    """Ordered normalized projective points, one row per point.

    The paper-style (s+1) x N matrix is ``points.T``.
    """

    ctx: FieldCtx = field(repr=False)
    dim: int
    points: np.ndarray
    provenance: str = "direct"

    def __len__(self):
        return len(self.points)

    def as_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(c) for c in row) for row in self.points}

    def sorted_rows(self) -> list[tuple[int, ...]]:
        return sorted(self.as_set())


@dataclass(frozen=True)
class ValueProfile:
    Q: int
    d: int
    s: int
    counts: tuple[int, ...]
    zero: int
    on_units: int | None
    off_units: int | None

    def __getitem__(self, a):
        return self.counts[a]


def _class_value(values):
    values = set(values)
    return values.pop() if len(values) == 1 else None


def value_profile(ctx: FieldCtx, d: int, s: int, max_field: int = PROFILE_MAX_FIELD) -> ValueProfile:
    """Solution counts of x_1^d + ... + x_s^d = a for every a, by convolution.

    ``on_units``/``off_units`` are the common counts on U_n and on its
    nonzero complement, or None if the counts are not constant there.
    """
    if ctx.Q > max_field:
        raise SizeExceeded("value profile field", ctx.Q, max_field)
    if s < 1:
        raise ValueError("s must be >= 1")
    U = unit_group(ctx, d)
    one = np.array(dth_root_counts(ctx, d), dtype=object)
    support = [int(a) for a in np.flatnonzero(one)]
    codes = np.arange(ctx.Q, dtype=np.int64)
    # shifts[a][x] = x - a
    shifts = {a: ctx.vadd(codes, ctx.neg(a)) for a in support}

    prof = one.copy()
    for _ in range(s - 1):
        new = np.zeros(ctx.Q, dtype=object)
        for a in support:
            new += one[a] * prof[shifts[a]]
        prof = new

    counts = tuple(int(c) for c in prof)
    off = [counts[x] for x in range(1, ctx.Q) if not U.mask[x]]
    return ValueProfile(
        Q=ctx.Q,
        d=d,
        s=s,
        counts=counts,
        zero=counts[0],
        on_units=_class_value(counts[x] for x in U.members),
        off_units=_class_value(off) if off else None,
    )


def naive_count(ctx: FieldCtx, d: int, s: int, b: int, max_tuples: int = NAIVE_MAX) -> int:
    """Count tuples with x_1^d + ... + x_s^d = b by looping over all of F^s."""
    if ctx.Q**s > max_tuples:
        raise SizeExceeded("naive enumeration", ctx.Q**s, max_tuples)
    powers = [ctx.pow(x, d) if x else 0 for x in range(ctx.Q)]
    total = 0
    for xs in itertools.product(range(ctx.Q), repeat=s):
        acc = 0
        for x in xs:
            acc = ctx.add(acc, powers[x])
        if acc == b:
            total += 1
    return total


def projective_size(Q: int, s: int) -> int:
    return (Q ** (s + 1) - 1) // (Q - 1)


def projective_points(ctx: FieldCtx, s: int, max_points: int = SCAN_MAX) -> np.ndarray:
    """All normalized points of P^s in scan order.

    Points are ordered by the position of their leading 1 (leftmost first),
    then lexicographically by the codes of the trailing coordinates.
    """
    total = projective_size(ctx.Q, s)
    if total > max_points:
        raise SizeExceeded(f"P^{s}(F_{ctx.Q})", total, max_points)
    blocks = []
    for lead in range(s + 1):
        free = s - lead
        if free:
            tail = np.indices((ctx.Q,) * free, dtype=np.int64).reshape(free, -1).T
        else:
            tail = np.zeros((1, 0), dtype=np.int64)
        block = np.zeros((len(tail), s + 1), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1 :] = tail
        blocks.append(block)
    return np.concatenate(blocks)


def diagonal_residual(ctx: FieldCtx, points: np.ndarray, d: int) -> np.ndarray:
    """Codes of sum_i x_i^d for each row of ``points``."""
    table = ctx.power_table(d)
    acc = np.zeros((len(points), ctx.m), dtype=np.int64)
    for i in range(points.shape[1]):
        acc += ctx.digits[table[points[:, i]]]
    return (acc % ctx.p) @ ctx.place


def projective_scan(ctx: FieldCtx, d: int, s: int, max_points: int = SCAN_MAX) -> PointMatrix:
    """Zeros of x_0^d + ... + x_s^d in P^s, in scan order."""
    pts = projective_points(ctx, s, max_points)
    keep = diagonal_residual(ctx, pts, d) == 0
    return PointMatrix(ctx, s, pts[keep], "direct")


def projective_scan_count(ctx: FieldCtx, d: int, s: int, max_points: int = SCAN_MAX) -> int:
    return len(projective_scan(ctx, d, s, max_points))


def dth_root_counts(ctx: FieldCtx, d: int) -> list[int]:
    """Single-variable profile |{x : x^d = a}| for every code a."""
    return [len(dth_roots(ctx, a, d)) for a in range(ctx.Q)]
