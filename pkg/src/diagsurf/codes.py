"""Evaluation codes on projective point sets and their exact weight spectra.

C_P(h, s, q) evaluates all degree-h monomials at every point of P^s(F_q);
C_H(h, s, q) does the same on the Hermitian points.  Evaluation happens on
the normalized representative of each point.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .counts import pi_size
from .enumeration import PointMatrix, projective_points
from .errors import SizeExceeded
from .ff import FieldCtx, build_field
from .hermitian import build_direct

ENUM_MAX = 2**24


def monomial_basis(s: int, h: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the degree-h monomials in x_0..x_s, x_0^h first."""

    def rec(nvars, total):
        if nvars == 1:
            yield (total,)
            return
        for e in range(total, -1, -1):
            for rest in rec(nvars - 1, total - e):
                yield (e,) + rest

    return list(rec(s + 1, h))


@dataclass(frozen=True)
class GeneratorMatrix:
    ctx: FieldCtx = field(repr=False)
    monomials: tuple[tuple[int, ...], ...]
    rows: np.ndarray

    @property
    def n(self) -> int:
        return self.rows.shape[1]


def evaluation_matrix(points: PointMatrix, h: int) -> GeneratorMatrix:
    ctx = points.ctx
    pts = points.points
    monos = monomial_basis(points.dim, h)
    rows = np.empty((len(monos), len(pts)), dtype=np.int64)
    logs = ctx.log[pts]
    for i, mono in enumerate(monos):
        used = [j for j, e in enumerate(mono) if e]
        zero = (pts[:, used] == 0).any(axis=1)
        exps = sum(e * logs[:, j] for j, e in enumerate(mono) if e) % ctx.order
        rows[i] = np.where(zero, 0, ctx.exp[exps])
    return GeneratorMatrix(ctx, tuple(monos), rows)


def row_reduce(ctx: FieldCtx, rows: np.ndarray) -> np.ndarray:
    """Reduced row echelon basis of the row space over F_Q."""
    M = np.array(rows, dtype=np.int64, copy=True)
    nrows, ncols = M.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(M[rank:, col])
        if not len(nz):
            continue
        piv = rank + nz[0]
        M[[rank, piv]] = M[[piv, rank]]
        M[rank] = ctx.vmul(M[rank], ctx.inv(int(M[rank, col])))
        for i in range(nrows):
            if i != rank and M[i, col]:
                M[i] = ctx.vadd(M[i], ctx.vneg(ctx.vmul(M[rank], int(M[i, col]))))
        rank += 1
    return M[:rank]


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    k: int
    q: int
    weights: dict

    @property
    def nonzero_weights(self) -> set[int]:
        return {w for w, c in self.weights.items() if w and c}

    @property
    def min_weight(self) -> int | None:
        nz = self.nonzero_weights
        return min(nz) if nz else None

    def to_json(self) -> str:
        data = {"n": self.n, "k": self.k, "weights": {str(w): c for w, c in sorted(self.weights.items())}}
        return json.dumps(data, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "count"])
        w.writerows(sorted(self.weights.items()))
        return buf.getvalue()


def weight_distribution(G: GeneratorMatrix, max_words: int = ENUM_MAX) -> WeightDistribution:
    """Exact spectrum by enumerating every codeword of the row space."""
    ctx = G.ctx
    basis = row_reduce(ctx, G.rows)
    k, n = basis.shape
    if ctx.Q**k > max_words:
        raise SizeExceeded(f"codeword enumeration (rank {k} over F_{ctx.Q})", ctx.Q**k, max_words)
    hist = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        hist[0] = 1
    else:
        scalars = np.arange(ctx.Q, dtype=np.int64)
        words = np.zeros((1, n), dtype=np.int64)
        for g in basis[:-1]:
            multiples = ctx.vmul(scalars[:, None], g[None, :])
            words = ctx.vadd(words[:, None, :], multiples[None, :, :]).reshape(-1, n)
        last = basis[-1]
        for lam in range(ctx.Q):
            shifted = ctx.vadd(words, ctx.vmul(last, lam)[None, :])
            hist += np.bincount((shifted != 0).sum(axis=1), minlength=n + 1)
    weights = {int(w): int(c) for w, c in enumerate(hist) if c}
    return WeightDistribution(n=n, k=k, q=ctx.Q, weights=weights)


def matrix_csv(G: GeneratorMatrix) -> str:
    ctx = G.ctx
    buf = io.StringIO()
    buf.write("# diagsurf generator matrix\n")
    buf.write(f"# field: p={ctx.p} m={ctx.m} Q={ctx.Q}\n")
    buf.write(f"# modulus (constant term first): {' '.join(map(str, ctx.spec.modulus))}\n")
    buf.write("# element code: sum c_i p^i for the residue sum c_i x^i; primitive element is x\n")
    buf.write("# one row per monomial (exponents in first column), one column per point\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["monomial"] + [f"P{j}" for j in range(G.n)])
    for mono, row in zip(G.monomials, G.rows.tolist()):
        w.writerow([" ".join(map(str, mono))] + row)
    return buf.getvalue()


def hermitian_code(p: int, r: int, s: int, h: int) -> GeneratorMatrix:
    ctx = build_field(p, 2 * r)
    return evaluation_matrix(build_direct(ctx, s), h)


def projective_code(p: int, r: int, s: int, h: int) -> GeneratorMatrix:
    ctx = build_field(p, 2 * r)
    pm = PointMatrix(ctx, s, projective_points(ctx, s), "direct")
    return evaluation_matrix(pm, h)


@dataclass(frozen=True)
class TwoWeightReport:
    p: int
    r: int
    s: int
    spectrum: WeightDistribution
    corrected: frozenset
    literal: frozenset

    @property
    def observed(self) -> frozenset:
        return frozenset(self.spectrum.nonzero_weights)

    @property
    def matches_corrected(self) -> bool:
        return self.observed == self.corrected

    @property
    def matches_literal(self) -> bool:
        return self.observed == self.literal


def two_weight_check(p: int, r: int, s: int) -> TwoWeightReport:
    """h = 1 Hermitian code spectrum against both readings of the two-weight claim.

    corrected: p^(r(2s-1)) and p^(r(2s-1)) + (-1)^(s-1) p^(r(s-1));
    literal:   p^r (2s-1) + (-1)^(s-1) p^(s-1) and p^(r(2s-1)).
    """
    spec = weight_distribution(hermitian_code(p, r, s, 1))
    top = p ** (r * (2 * s - 1))
    corrected = frozenset({top, top + (-1) ** (s - 1) * p ** (r * (s - 1))})
    literal = frozenset({p**r * (2 * s - 1) + (-1) ** (s - 1) * p ** (s - 1), top})
    return TwoWeightReport(p, r, s, spec, corrected, literal)


@dataclass(frozen=True)
class MinWeightReport:
    n: int
    k: int
    min_weight: int
    bound: int

    @property
    def met(self) -> bool:
        return self.min_weight >= self.bound

    @property
    def equality(self) -> bool:
        return self.min_weight == self.bound


def min_weight_vs_tss(p: int, r: int, s: int, h: int) -> MinWeightReport:
    """Minimum weight of C_P(h, s, q) against n - (h q^(s-1) + pi_{s-2})."""
    q = p ** (2 * r)
    spec = weight_distribution(projective_code(p, r, s, h))
    bound = spec.n - (h * q ** (s - 1) + pi_size(q, s - 2))
    return MinWeightReport(spec.n, spec.k, spec.min_weight, bound)
