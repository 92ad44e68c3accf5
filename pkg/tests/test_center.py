"""Center: Casimirs, weight projectors, canonical basis, commutant."""

from fractions import Fraction

import pytest

from qpm.center import (center_brute_force, center_dimension,
                        decompose_central, is_central, weight_projectors)
from qpm.linalg import SpanSolver


@pytest.fixture(scope="module")
def cb23(T23):
    return T23.center


def test_casimir_centrality(P23):
    cp, cm = P23.casimirs()
    assert is_central(P23, cp)
    assert is_central(P23, cm)
    # sector separation: [C+, e-] = 0 is part of centrality
    em = P23.gen("em")
    assert (cp * em - em * cp).is_zero()


def test_casimir_eigenvalue_example(P23):
    # eigenvalue on X^alpha_{r,s} is alpha^{p-} (-1)^s (Q+^r + Q+^{-r})
    from qpm.reps import cached_irreducible
    from qpm.linalg import SparseMat
    P = P23
    cp, _ = P.casimirs()
    m = cached_irreducible(P, 1, 2, 3)
    val = P.casimir_eigenvalue_plus(1, 2, 3)
    assert (m.act(cp) - SparseMat.identity(m.dim, P.ctx).scale(val)).is_zero()


def test_weight_projector_identities(P23):
    P = P23
    for (r, s) in [(1, 1), (1, 2), (2, 2)]:
        proj = weight_projectors(P, r, s)
        for k1 in proj:
            assert proj[k1] * proj[k1] == proj[k1]
            for k2 in proj:
                if k1 < k2:
                    assert (proj[k1] * proj[k2]).is_zero()
        sgn = (-1) ** (P.p_minus * (r - 1) + P.p_plus * (s - 1))
        total = proj["up"] + proj["left"] + proj["right"] + proj["down"]
        assert total == (P.one + P.gen("K", P.pp) * sgn) * Fraction(1, 2)
    prj = weight_projectors(P, 1, P.p_minus)
    assert prj["left"].is_zero() and prj["down"].is_zero()
    prj = weight_projectors(P, P.p_plus, 1)
    assert prj["right"].is_zero() and prj["down"].is_zero()


def test_canonical_basis_size_and_centrality(P23, cb23):
    assert len(cb23.ordered()) == center_dimension(P23) == 20
    for lab, el in cb23.ordered():
        assert is_central(P23, el), lab


def test_idempotent_relations(P23, cb23):
    tot = P23.zero
    for lab1, e1 in cb23.idempotents.items():
        assert e1 * e1 == e1
        tot = tot + e1
        for lab2, e2 in cb23.idempotents.items():
            if lab1 < lab2:
                assert (e1 * e2).is_zero()
    assert tot == P23.one


def test_radical_products(P23, cb23):
    S = cb23.RADICAL_PRODUCT_SCALE
    for (r, s) in P23.set_I1():
        vne = cb23.v_interior[("ne", (r, s))]
        vnw = cb23.v_interior[("nw", (r, s))]
        vsw = cb23.v_interior[("sw", (r, s))]
        vse = cb23.v_interior[("se", (r, s))]
        assert vne * vnw == cb23.w_interior[("up", (r, s))] * S
        assert vne * vse == cb23.w_interior[("right", (r, s))] * S
        assert vsw * vnw == cb23.w_interior[("left", (r, s))] * S
        assert vsw * vse == cb23.w_interior[("down", (r, s))] * S
        assert (vne * vsw).is_zero()
        assert (vnw * vse).is_zero()
        e = cb23.idempotents[(r, s)]
        for v in (vne, vnw, vsw, vse):
            assert e * v == v
    for (key, lab), v in cb23.v_boundary.items():
        assert cb23.idempotents[lab] * v == v
        assert (v * v).is_zero()


def test_radical_cube(P23, cb23):
    rad = (list(cb23.v_interior.values()) + list(cb23.w_interior.values())
           + list(cb23.v_boundary.values()))
    for x in rad[:4]:
        for y in rad[:4]:
            for z in rad[:4]:
                assert (x * y * z).is_zero()


def test_steinberg_idempotent_action(P23, cb23):
    # e(p+,p-) is the identity on the Steinberg module and kills the rest
    from qpm.reps import cached_irreducible, irreducible_labels
    from qpm.linalg import SparseMat
    P = P23
    e = cb23.idempotents[(P.p_plus, P.p_minus)]
    for lab in irreducible_labels(P):
        m = cached_irreducible(P, *lab)
        mat = m.act(e)
        if lab == (1, P.p_plus, P.p_minus):
            assert (mat - SparseMat.identity(m.dim, P.ctx)).is_zero()
        else:
            assert mat.is_zero()


def test_brute_force_dimensions(P12, P13, P23):
    assert len(center_brute_force(P12)) == 5
    assert len(center_brute_force(P13)) == 8
    assert len(center_brute_force(P23)) == 20


def test_spans_agree(P23, cb23):
    bf = center_brute_force(P23)
    span_bf = SpanSolver([z.coeffs for z in bf], P23.ctx)
    span_cb = SpanSolver([el.coeffs for _, el in cb23.ordered()], P23.ctx)
    assert span_cb.independent
    for _, el in cb23.ordered():
        assert span_bf.contains(el.coeffs)
    for z in bf:
        assert span_cb.contains(z.coeffs)


def test_decompose_central(P23, cb23):
    P = P23
    dec = decompose_central(P, P.one, cb23)
    assert all(v == P.ctx.one for v in dec.a.values())
    assert all(v.is_zero() for v in dec.cv.values())
    e11 = cb23.idempotents[(1, 1)]
    dec = decompose_central(P, e11, cb23)
    assert dec.a[(1, 1)] == P.ctx.one
    assert sum(1 for v in dec.a.values() if not v.is_zero()) == 1
    z = (e11 * P.q + cb23.v_interior[("ne", (1, 1))] * P.q_plus
         + cb23.w_interior[("down", (1, 1))] * 5
         + cb23.v_boundary[("up", (2, 1))] * 3)
    dec = decompose_central(P, z, cb23)
    assert dec.reconstruct(cb23) == z
    assert dec.cw[("down", (1, 1))] == P.ctx.integer(5)
    with pytest.raises(ValueError):
        decompose_central(P, P.gen("ep"), cb23)


def test_psi_normalization_constants(P23):
    # displayed closed forms for the projected minimal polynomial values
    from qpm.center import (_beta_plus, _poly_div_linear, _poly_eval,
                            _psi_poly)
    P = P23
    ctx = P.ctx
    for (r, s) in P.set_I1():
        psi = _psi_poly(P, "+")
        beta = _beta_plus(P, r, s)
        red = _poly_div_linear(_poly_div_linear(psi, beta, ctx), beta, ctx)
        val = _poly_eval(red, beta, ctx)
        assert val == ctx.integer(4 * P.p_plus ** 2) * (
            (P.Q_plus ** r - P.Q_plus ** (-r)) ** 2).inv()
    two = ctx.integer(2)
    beta = _beta_plus(P, P.p_plus, P.p_minus)
    assert beta == two or beta == -two
    red = _poly_div_linear(_psi_poly(P, "+"), beta, ctx)
    sign = 1 if beta == two else -1
    assert _poly_eval(red, beta, ctx) == ctx.integer(sign * 4 * P.p_plus ** 2)
