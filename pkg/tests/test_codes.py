import itertools
import json
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagsurf.codes import (
    evaluation_matrix,
    hermitian_code,
    matrix_csv,
    min_weight_vs_tss,
    monomial_basis,
    projective_code,
    row_reduce,
    two_weight_check,
    weight_distribution,
    GeneratorMatrix,
)
from diagsurf.errors import SizeExceeded
from diagsurf.ff import build_field
from diagsurf.hermitian import build_direct, build_recursive


def brute_spectrum(G):
    """Weights of every F_q-combination of the raw rows (no row reduction)."""
    ctx = G.ctx
    words = set()
    for coeffs in itertools.product(range(ctx.Q), repeat=len(G.rows)):
        word = [0] * G.n
        for c, row in zip(coeffs, G.rows.tolist()):
            word = [ctx.add(w, ctx.mul(c, x)) for w, x in zip(word, row)]
        words.add(tuple(word))
    hist = {}
    for w in words:
        wt = sum(1 for x in w if x)
        hist[wt] = hist.get(wt, 0) + 1
    return hist


@pytest.mark.parametrize("s,h", [(2, 1), (2, 2), (3, 2), (1, 4), (3, 3)])
def test_monomial_basis(s, h):
    monos = monomial_basis(s, h)
    assert len(monos) == comb(s + h, h)
    assert all(sum(m) == h and len(m) == s + 1 for m in monos)
    assert monos == sorted(monos, reverse=True)


def test_h1_matrix_is_point_matrix(F4):
    H = build_direct(F4, 2)
    G = evaluation_matrix(H, 1)
    assert G.rows.shape == (3, 9)
    assert (G.rows == H.points.T).all()


def test_h2_entries(F4):
    H = build_direct(F4, 2)
    G = evaluation_matrix(H, 2)
    assert G.rows.shape == (6, 9)
    for i, mono in enumerate(G.monomials):
        for j, pt in enumerate(H.points.tolist()):
            v = 1
            for x, e in zip(pt, mono):
                for _ in range(e):
                    v = F4.mul(v, x)
            assert G.rows[i, j] == v


@pytest.mark.parametrize("p,r,s,h", [(2, 1, 2, 1), (2, 1, 2, 2), (2, 1, 1, 2), (3, 1, 1, 2)])
def test_spectrum_matches_brute_force(p, r, s, h):
    G = hermitian_code(p, r, s, h)
    if G.ctx.Q ** len(G.rows) > 5000:
        pytest.skip("too many raw messages")
    assert weight_distribution(G).weights == brute_spectrum(G)


def test_spectrum_examples():
    ch = weight_distribution(hermitian_code(2, 1, 2, 1))
    assert (ch.n, ch.k, ch.nonzero_weights) == (9, 3, {6, 8})
    cp = weight_distribution(projective_code(2, 1, 2, 1))
    assert (cp.n, cp.k, cp.weights) == (21, 3, {0: 1, 16: 63})
    ch3 = weight_distribution(hermitian_code(2, 1, 3, 1))
    assert (ch3.n, ch3.k, ch3.nonzero_weights) == (45, 4, {32, 36})
    for spec in (ch, cp, ch3):
        assert sum(spec.weights.values()) == spec.q**spec.k and spec.weights[0] == 1


@pytest.mark.parametrize("p,r,s", [(2, 1, 1), (2, 1, 2), (2, 1, 3), (3, 1, 2)])
def test_projective_h1_constant_weight(p, r, s):
    q = p ** (2 * r)
    spec = weight_distribution(projective_code(p, r, s, 1))
    assert spec.nonzero_weights == {q**s}


def test_rank_deficient_rows(F4):
    # h = 3 = p^r + 1 makes the defining equation itself a zero row combination
    G = hermitian_code(2, 1, 2, 3)
    basis = row_reduce(F4, G.rows)
    assert len(basis) < len(G.rows)
    spec = weight_distribution(G)
    assert spec.k == len(basis)
    assert sum(spec.weights.values()) == 4**spec.k


def test_enumeration_bound():
    with pytest.raises(SizeExceeded, match="rank 6"):
        weight_distribution(projective_code(2, 1, 2, 2), max_words=1000)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_spectrum_invariant_under_change_of_basis(seed):
    rng = np.random.default_rng(seed)
    G = hermitian_code(2, 1, 2, 2)
    ctx = G.ctx
    k = len(G.rows)
    while True:
        M = rng.integers(0, ctx.Q, size=(k, k))
        if len(row_reduce(ctx, M)) == k:
            break
    rows = np.zeros_like(G.rows)
    for i in range(k):
        acc = np.zeros(G.n, dtype=np.int64)
        for j in range(k):
            acc = ctx.vadd(acc, ctx.vmul(G.rows[j], int(M[i, j])))
        rows[i] = acc
    perm = rng.permutation(k)
    H = GeneratorMatrix(ctx, G.monomials, rows[perm])
    assert weight_distribution(H).weights == weight_distribution(G).weights


@pytest.mark.parametrize("p,r,s", [(2, 1, 2), (2, 1, 3), (3, 1, 2)])
def test_recursive_points_same_spectrum(p, r, s):
    ctx = build_field(p, 2 * r)
    rec = build_recursive(ctx, s)[0][-1]
    assert weight_distribution(evaluation_matrix(rec, 1)).weights == weight_distribution(
        evaluation_matrix(build_direct(ctx, s), 1)
    ).weights


@pytest.mark.parametrize("p,r,s,weights", [(2, 1, 2, {6, 8}), (2, 1, 3, {32, 36}), (3, 1, 2, {24, 27})])
def test_two_weight(p, r, s, weights):
    rep = two_weight_check(p, r, s)
    assert rep.observed == weights
    assert rep.matches_corrected and not rep.matches_literal


def test_min_weight_vs_tss():
    rep = min_weight_vs_tss(2, 1, 2, 1)
    assert (rep.n, rep.k, rep.min_weight, rep.bound, rep.equality) == (21, 3, 16, 16, True)
    rep = min_weight_vs_tss(2, 1, 2, 2)
    assert (rep.n, rep.k, rep.min_weight, rep.bound) == (21, 6, 12, 12)
    rep = min_weight_vs_tss(3, 1, 1, 1)
    assert (rep.n, rep.k, rep.min_weight, rep.bound, rep.equality) == (10, 2, 9, 9, True)


def test_exports():
    G = hermitian_code(2, 1, 2, 1)
    spec = weight_distribution(G)
    assert json.loads(spec.to_json()) == {"n": 9, "k": 3, "weights": {"0": 1, "6": 36, "8": 27}}
    assert spec.to_csv() == "weight,count\n0,1\n6,36\n8,27\n"
    text = matrix_csv(G)
    body = [ln for ln in text.splitlines() if not ln.startswith("#")]
    assert body[0].split(",")[0] == "monomial" and len(body) == 4
