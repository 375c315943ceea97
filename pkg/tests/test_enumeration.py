import pytest

from diagsurf.enumeration import (
    naive_count,
    projective_points,
    projective_scan,
    projective_size,
    value_profile,
)
from diagsurf.errors import SizeExceeded
from diagsurf.ff import build_field, unit_group


def test_profile_f4_two_variables(F4):
    prof = value_profile(F4, 3, 2)
    assert prof.counts == (10, 6, 0, 0)
    assert (prof.zero, prof.on_units, prof.off_units) == (10, 6, 0)


def test_profile_f4_one_variable(F4):
    assert value_profile(F4, 3, 1).counts == (1, 3, 0, 0)


def test_profile_f9_squares(F9):
    prof = value_profile(F9, 2, 2)
    # N1 and N2 coincide numerically here
    assert (prof.zero, prof.on_units, prof.off_units) == (17, 8, 8)


def test_naive_examples(F4, F9):
    assert naive_count(F4, 3, 2, 0) == 10
    assert naive_count(F4, 3, 3, 0) == 28
    assert naive_count(F9, 4, 2, 0) == 33


@pytest.mark.parametrize(
    "p,m,d,s",
    [(2, 2, 3, 1), (2, 2, 3, 2), (2, 2, 3, 3), (2, 2, 3, 4), (3, 2, 4, 2), (3, 2, 4, 3),
     (3, 2, 2, 3), (2, 4, 5, 2), (2, 4, 3, 3), (5, 2, 6, 2), (5, 2, 3, 2)],
)
def test_profile_matches_naive(p, m, d, s):
    F = build_field(p, m)
    prof = value_profile(F, d, s)
    for b in range(F.Q):
        assert prof[b] == naive_count(F, d, s, b)
    assert sum(prof.counts) == F.Q**s


@pytest.mark.parametrize("p,m,d", [(2, 2, 3), (3, 2, 2), (3, 2, 4), (2, 4, 3), (2, 4, 5), (5, 2, 3), (3, 4, 10)])
def test_profile_class_constant(p, m, d):
    F = build_field(p, m)
    U = unit_group(F, d)
    for s in range(1, 6):
        prof = value_profile(F, d, s)
        assert prof.on_units is not None and prof.off_units is not None
        assert sum(prof.counts) == F.Q**s
        assert prof.zero + U.n * prof.on_units + (F.Q - 1 - U.n) * prof.off_units == F.Q**s


def test_profile_bound(F4):
    with pytest.raises(SizeExceeded):
        value_profile(F4, 3, 2, max_field=3)


def test_naive_bound(F4):
    with pytest.raises(SizeExceeded):
        naive_count(F4, 3, 5, 0, max_tuples=1000)


@pytest.mark.parametrize("p,m,s", [(2, 2, 1), (2, 2, 2), (3, 2, 2), (2, 2, 3)])
def test_projective_points_normalized_and_complete(p, m, s):
    F = build_field(p, m)
    pts = projective_points(F, s)
    assert len(pts) == projective_size(F.Q, s)
    rows = [tuple(r) for r in pts.tolist()]
    assert len(set(rows)) == len(rows)
    for row in rows:
        lead = next(x for x in row if x)
        assert lead == 1
    # scan order: leading position first, then lexicographic
    keys = [(next(i for i, x in enumerate(row) if x), row) for row in rows]
    assert keys == sorted(keys)


@pytest.mark.parametrize(
    "p,m,d,s,expected",
    [(2, 2, 3, 1, 3), (2, 2, 3, 2, 9), (3, 2, 4, 2, 28), (3, 2, 2, 1, 2), (3, 2, 2, 2, 10), (2, 4, 5, 2, 65)],
)
def test_projective_scan_sizes(p, m, d, s, expected):
    F = build_field(p, m)
    pm = projective_scan(F, d, s)
    assert len(pm) == expected
    # every scanned point satisfies the equation, checked with scalar arithmetic
    for row in pm.points.tolist():
        acc = 0
        for x in row:
            acc = F.add(acc, F.pow(x, d) if x else 0)
        assert acc == 0


@pytest.mark.parametrize("p,m,d,s", [(2, 2, 3, 1), (2, 2, 3, 2), (2, 2, 3, 3), (3, 2, 4, 2), (3, 2, 2, 2), (2, 4, 5, 1)])
def test_scan_consistent_with_profile(p, m, d, s):
    F = build_field(p, m)
    assert len(projective_scan(F, d, s)) * (F.Q - 1) + 1 == value_profile(F, d, s + 1).zero


def test_scan_bound(F9):
    with pytest.raises(SizeExceeded):
        projective_scan(F9, 4, 3, max_points=100)
