from fractions import Fraction

import pytest

from diagsurf.counts import DiagonalParams, projective_count
from diagsurf.errors import BadParams
from diagsurf.ff import build_field
from diagsurf.hermitian import (
    bose_corrected,
    bose_literal,
    build_direct,
    build_recursive,
    points_csv,
    read_points_csv,
    verify_recursion,
)


def hermitian_residual(ctx, row):
    d = ctx.p ** (ctx.m // 2) + 1
    acc = 0
    for x in row:
        acc = ctx.add(acc, ctx.pow(x, d) if x else 0)
    return acc


@pytest.mark.parametrize("p,m,s,size", [(2, 2, 1, 3), (2, 2, 2, 9), (3, 2, 2, 28), (2, 4, 2, 65)])
def test_build_direct(p, m, s, size):
    assert len(build_direct(build_field(p, m), s)) == size


@pytest.mark.parametrize("p,m,s_max,sizes", [(2, 2, 3, [3, 9, 45]), (3, 2, 3, [4, 28, 280]), (2, 4, 2, [5, 65])])
def test_build_recursive_sizes(p, m, s_max, sizes):
    ctx = build_field(p, m)
    mats, certs = build_recursive(ctx, s_max)
    assert [len(H) for H in mats] == sizes
    for H, direct in zip(mats, (build_direct(ctx, s) for s in range(1, s_max + 1))):
        assert H.sorted_rows() == direct.sorted_rows()
        assert len(H.as_set()) == len(H)
        for row in H.points.tolist():
            assert next(x for x in row if x) == 1
            assert hermitian_residual(ctx, row) == 0
    for cert, nxt in zip(certs, mats[1:]):
        assert cert.holds(len(nxt))


def test_block_layout_f4(F4):
    mats, certs = build_recursive(F4, 2)
    H2 = mats[1]
    cert = certs[0]
    assert (cert.h_s, cert.a_s, cert.p_s, cert.blocks) == (3, 2, 5, 3)
    A = [row[:2] for row in H2.points.tolist()[:2]]
    # three blocks of width a_1 = 2 repeating A_1, then H_1 padded with zero
    for i in range(3):
        block = H2.points.tolist()[2 * i : 2 * i + 2]
        assert [row[:2] for row in block] == A
        assert [row[2] for row in block] == [F4.mul(b, F4.pow(cert.zeta_root, i)) for b in cert.representatives]
    assert [row[2] for row in H2.points.tolist()[6:]] == [0, 0, 0]


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (2, 4), (5, 2)])
def test_certificate_roots(p, m):
    ctx = build_field(p, m)
    d = p ** (m // 2) + 1
    _, certs = build_recursive(ctx, 2)
    zeta = certs[0].zeta_root
    assert ctx.pow(zeta, d) == 1 and zeta != 1
    assert all(ctx.pow(zeta, j) != 1 for j in range(1, d))


def test_verify_recursion_reports_bose_values(F4):
    rows = verify_recursion(F4, 3)
    assert all(row.passed for row in rows)
    assert [row.bose_literal for row in rows] == [Fraction(0), Fraction(3), Fraction(9)]


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3)])
def test_bose_corrected_matches_counts(p, r):
    for s in range(1, 7):
        assert bose_corrected(p, r, s) == projective_count(DiagonalParams(p, r, 1, p**r + 1), s)
        if s > 1:
            assert bose_literal(p, r, s) == bose_corrected(p, r, s - 1)


def test_hermitian_needs_even_degree():
    with pytest.raises(BadParams):
        build_direct(build_field(2, 3), 1)


def test_csv_roundtrip(F4):
    H = build_recursive(F4, 3)[0][-1]
    text = points_csv(H)
    assert text.startswith("# diagsurf point matrix\n")
    assert "x0,x1,x2,x3\n" in text
    assert read_points_csv(text) == [tuple(r) for r in H.points.tolist()]
    assert points_csv(build_recursive(F4, 3)[0][-1]) == text
