"""Field arithmetic, q-integers, Gauss-sum square roots, serialization."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from qpm.cyclotomic import (Cyclo, CycloContext, LaurentZ, cyclotomic_polynomial,
                            euler_phi, gauss_sqrt, q_binomial, q_binomial_poly,
                            q_factorial_poly, q_int, q_int_poly, sqrt2,
                            sqrt_half_pp)

CTX = CycloContext(144)


def rand_elements(ctx, seed, count):
    import random
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        num = {rng.randrange(ctx.phi): rng.randint(-9, 9) for _ in range(3)}
        out.append(ctx._normalized({k: v for k, v in num.items() if v},
                                   rng.randint(1, 7)))
    return out


def test_phi_and_polynomial():
    assert euler_phi(144) == 48
    poly = cyclotomic_polynomial(144)
    # x^48 - x^24 + 1
    assert poly[48] == 1 and poly[24] == -1 and poly[0] == 1
    assert sum(1 for c in poly if c) == 3


def test_roots_of_unity():
    assert CTX.root_of_unity(0) == CTX.one
    assert CTX.root_of_unity(72) == CTX.integer(-1)
    z = CTX.root_of_unity(1)
    assert z ** 144 == CTX.one
    # Phi_N(zeta) = 0 in canonical form: zeta^48 - zeta^24 + 1 = 0
    assert (CTX.root_of_unity(48) - CTX.root_of_unity(24) + CTX.one).is_zero()


def test_q_power_identities():
    # q = zeta^6 with q^{4 p+ p-} = 1 and q^{2 p+ p-} = -1, by repeated squaring
    q = CTX.root_of_unity(6)
    acc = CTX.one
    for _ in range(24):
        acc = acc * q
    assert acc == CTX.one
    acc = CTX.one
    for _ in range(12):
        acc = acc * q
    assert acc == CTX.integer(-1)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 143), st.integers(0, 143), st.integers(0, 143),
       st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_field_axioms(e1, e2, e3, c1, c2, c3):
    x = CTX.root_of_unity(e1) * c1
    y = CTX.root_of_unity(e2) * c2 + CTX.one
    z = CTX.root_of_unity(e3) * c3 - CTX.root_of_unity(7)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    if not y.is_zero():
        assert y * y.inv() == CTX.one


def test_conjugation_positivity():
    for x in rand_elements(CTX, 99, 100):
        y = x.conj() * x
        re, im = y.embed()
        assert abs(im) < 1e-9
        assert re > -1e-9


def test_sqrt_constants():
    s2 = sqrt2(CTX)
    assert s2 * s2 == CTX.integer(2)
    assert s2.embed()[0] > 0
    g = gauss_sqrt(CTX, 6)
    assert g * g == CTX.integer(6)
    assert g.embed()[0] > 0
    s = sqrt_half_pp(CTX, 6)
    assert s * s == CTX.integer(3)
    assert abs(s.embed()[0] - math.sqrt(3)) < 1e-12


def test_gauss_sum_value():
    # sum_{j<2pp} q^{j^2} = (1 + i) sqrt(pp)
    q = CTX.root_of_unity(6)
    acc = CTX.zero
    for j in range(12):
        acc = acc + CTX.root_of_unity(6 * j * j)
    i_unit = CTX.root_of_unity(36)
    assert acc == (CTX.one + i_unit) * gauss_sqrt(CTX, 6)


def test_sqrt_branch_at_1_2():
    ctx = CycloContext(48)
    s = sqrt_half_pp(ctx, 2)
    assert s * s == ctx.one
    assert s.embed() == (1.0, 0.0)


def test_q_integers():
    x = CTX.root_of_unity(5)
    assert q_int(2, x) == x + x.inv()
    assert q_binomial(5, 0, x) == CTX.one
    # [p+]_+ vanishes at Q+ (2p+-th or p+-th root of unity)
    Qp = CTX.root_of_unity(108)
    assert q_int(2, Qp).is_zero()


def test_q_binomial_pascal_oracle():
    # the product-form binomials satisfy the Pascal-type recursion
    # [m choose n] = q^n [m-1 choose n] + q^{n-m} [m-1 choose n-1]
    for m in range(1, 6):
        for n in range(0, m + 1):
            lhs = q_binomial_poly(m, n)
            a = q_binomial_poly(m - 1, n) * LaurentZ({n: 1})
            b = q_binomial_poly(m - 1, n - 1) * LaurentZ({n - m: 1})
            assert lhs == a + b
    # specialization at a root where naive division would hit 0/0
    Qp = CTX.root_of_unity(108)  # order 4
    for m in range(5):
        for n in range(m + 1):
            val = q_binomial(m, n, Qp)
            # independent oracle: evaluate the Pascal recursion numerically
            import cmath
            qf = cmath.exp(2j * cmath.pi * 108 / 144)
            def brute(mm, nn):
                if nn in (0, mm):
                    return 1
                if nn < 0 or nn > mm:
                    return 0
                return (qf ** nn) * brute(mm - 1, nn) + (qf ** (nn - mm)) * brute(mm - 1, nn - 1)
            want = brute(m, n)
            got = complex(*val.embed())
            assert abs(got - want) < 1e-9, (m, n)


def test_generic_specialization_agreement(P23):
    # product-form value at Q_pm equals the symbolic rational form
    # specialized after cancellation over the polynomial ring
    P = P23
    for m in range(max(P.p_plus, P.p_minus)):
        for n in range(m + 1):
            sym = q_binomial_poly(m, n)
            num = q_factorial_poly(m)
            den = q_factorial_poly(n) * q_factorial_poly(m - n)
            assert num == sym * den  # exact cancellation certificate
            assert sym.eval_cyclo(P.Q_plus) == P.qbin_p(m, n)
            assert sym.eval_cyclo(P.Q_minus) == P.qbin_m(m, n)


def test_embedding():
    assert CTX.one.embed() == (1.0, 0.0)
    re, im = CTX.root_of_unity(36).embed()
    assert abs(re) < 1e-12 and abs(im - 1.0) < 1e-12
    hi = CTX.root_of_unity(1).embed(120)
    assert float(hi[0] ** 2 + hi[1] ** 2) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        CTX.one.embed(10)


def test_serialization_round_trip():
    for x in rand_elements(CTX, 5, 20):
        doc = x.to_json(precision=60)
        assert Cyclo.from_json(CTX, doc) == x
        assert doc["order"] == 144
        assert len(doc["coeffs"]) == 48
        for num, den in doc["coeffs"]:
            assert den > 0 and math.gcd(num, den) == 1
