"""Hermitian point sets H_s over F_q, q = p^(2r), built two ways.

``build_direct`` scans P^s for zeros of x_0^(p^r+1) + ... + x_s^(p^r+1).
``build_recursive`` grows H_{s+1} from H_s: every non-Hermitian point a of
P^s has residual beta = sum a_i^(p^r+1) in F_{p^r}^*, so x^(p^r+1) = -beta has
exactly p^r+1 roots b_1 * zeta^i and a extends to p^r+1 Hermitian points,
while each Hermitian point extends only by a trailing zero.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counts import DiagonalParams, pi_size, projective_count
from .enumeration import SCAN_MAX, PointMatrix, diagonal_residual, projective_points, projective_scan
from .errors import BadParams
from .ff import FieldCtx, dth_roots


def _half_degree(ctx: FieldCtx) -> int:
    if ctx.m % 2:
        raise BadParams(f"Hermitian sets need a field of even degree, got F_{ctx.p}^{ctx.m}")
    return ctx.m // 2


def hermitian_degree(ctx: FieldCtx) -> int:
    return ctx.p ** _half_degree(ctx) + 1


def build_direct(ctx: FieldCtx, s: int, max_points: int = SCAN_MAX) -> PointMatrix:
    return projective_scan(ctx, hermitian_degree(ctx), s, max_points)


@dataclass(frozen=True)
class RecursionCertificate:
    s: int
    h_s: int
    a_s: int
    p_s: int
    zeta_root: int
    blocks: int
    representatives: tuple[int, ...]

    def holds(self, h_next: int) -> bool:
        """a_s = p_s - h_s and h_{s+1} = (p^r+1) a_s + h_s."""
        return self.a_s == self.p_s - self.h_s and h_next == self.blocks * self.a_s + self.h_s


def _extend(ctx: FieldCtx, H: PointMatrix, max_points: int):
    """One step of the block construction: H_s -> (H_{s+1}, certificate)."""
    s = H.dim
    d = hermitian_degree(ctx)
    allpts = projective_points(ctx, s, max_points)
    hset = H.as_set()
    keep = np.array([tuple(int(c) for c in row) not in hset for row in allpts], dtype=bool)
    A = allpts[keep]

    beta = diagonal_residual(ctx, A, d)
    # residuals of non-Hermitian points are nonzero (p^r+1)-th powers, i.e. F_{p^r}^*
    subfield_order = ctx.p ** _half_degree(ctx) - 1
    for b in beta:
        if b == 0 or ctx.pow(int(b), subfield_order) != 1:
            raise AssertionError(f"residual {int(b)} outside F_(p^r)^*")
    reps = []
    for b in beta:
        roots = dth_roots(ctx, ctx.neg(int(b)), d)
        assert len(roots) == d
        reps.append(roots[0])
    reps = np.array(reps, dtype=np.int64)

    zeta = int(ctx.exp[(ctx.order // d) % ctx.order])
    blocks = []
    for i in range(d):
        last = ctx.vmul(reps, ctx.pow(zeta, i))
        blocks.append(np.column_stack([A, last]))
    blocks.append(np.column_stack([H.points, np.zeros(len(H), dtype=np.int64)]))
    points = np.concatenate(blocks)

    cert = RecursionCertificate(
        s=s,
        h_s=len(H),
        a_s=len(A),
        p_s=pi_size(ctx.Q, s),
        zeta_root=zeta,
        representatives=tuple(int(b) for b in reps),
        blocks=d,
    )
    return PointMatrix(ctx, s + 1, points, "recursive"), cert


def build_recursive(ctx: FieldCtx, s_max: int, max_points: int = SCAN_MAX):
    """H_1..H_{s_max} by the block construction, plus one certificate per step."""
    if s_max < 1:
        raise BadParams(f"s_max must be >= 1, got {s_max}")
    H = build_direct(ctx, 1, max_points)
    H = PointMatrix(ctx, 1, H.points, "recursive")
    mats, certs = [H], []
    for _ in range(s_max - 1):
        H, cert = _extend(ctx, H, max_points)
        mats.append(H)
        certs.append(cert)
    return mats, certs


def bose_literal(p: int, r: int, s: int) -> Fraction:
    """The Hermitian count formula exactly as printed (may not be an integer)."""
    q = p ** (2 * r)
    return Fraction((p ** (r * (s - 1)) - (-1) ** (s + 1)) * (p ** (r * s) - (-1) ** s), q - 1)


def bose_corrected(p: int, r: int, s: int) -> int:
    """(p^(r(s+1)) - (-1)^(s+1)) (p^(rs) - (-1)^s) / (q - 1)."""
    q = p ** (2 * r)
    value, rem = divmod((p ** (r * (s + 1)) - (-1) ** (s + 1)) * (p ** (r * s) - (-1) ** s), q - 1)
    assert rem == 0
    return value


@dataclass(frozen=True)
class RecursionRow:
    s: int
    h_direct: int
    h_recursive: int
    same_set: bool
    recursion_ok: bool
    closed_form: int
    bose_corrected: int
    bose_literal: Fraction

    @property
    def passed(self) -> bool:
        return (
            self.same_set
            and self.recursion_ok
            and self.h_direct == self.h_recursive == self.closed_form == self.bose_corrected
        )


def verify_recursion(ctx: FieldCtx, s_max: int, max_points: int = SCAN_MAX) -> list[RecursionRow]:
    r = _half_degree(ctx)
    params = DiagonalParams(ctx.p, r, 1, ctx.p**r + 1)
    mats, certs = build_recursive(ctx, s_max, max_points)
    rows = []
    for s, H in enumerate(mats, 1):
        direct = build_direct(ctx, s, max_points)
        if s == 1:
            rec_ok = True
        else:
            c = certs[s - 2]
            rec_ok = c.holds(len(H)) and c.p_s == pi_size(ctx.Q, s - 1)
        rows.append(
            RecursionRow(
                s=s,
                h_direct=len(direct),
                h_recursive=len(H),
                same_set=direct.sorted_rows() == H.sorted_rows() and len(H.as_set()) == len(H),
                recursion_ok=rec_ok,
                closed_form=projective_count(params, s),
                bose_corrected=bose_corrected(ctx.p, r, s),
                bose_literal=bose_literal(ctx.p, r, s),
            )
        )
    return rows


def points_csv(pm: PointMatrix) -> str:
    """CSV text: '#' header lines describing the encoding, then one row per point."""
    ctx = pm.ctx
    buf = io.StringIO()
    buf.write("# diagsurf point matrix\n")
    buf.write(f"# field: p={ctx.p} m={ctx.m} Q={ctx.Q}")
    if ctx.m % 2 == 0:
        buf.write(f" r={ctx.m // 2}")
    buf.write("\n")
    buf.write(f"# modulus (constant term first): {' '.join(map(str, ctx.spec.modulus))}\n")
    buf.write("# element code: sum c_i p^i for the residue sum c_i x^i; primitive element is x\n")
    buf.write(f"# dimension s={pm.dim} points={len(pm)} provenance={pm.provenance}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{i}" for i in range(pm.dim + 1)])
    w.writerows(pm.points.tolist())
    return buf.getvalue()


def read_points_csv(text: str) -> list[tuple[int, ...]]:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return [tuple(int(v) for v in row) for row in list(csv.reader(lines))[1:]]
