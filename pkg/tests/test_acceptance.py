"""Acceptance gate: the numbered criteria at their stated tolerances.

Tolerance is exact equality in Q(zeta_N) throughout; the only numeric
assertions are float embeddings of exact quantities.  Each criterion prints
one pass/fail line (run pytest with -s to stream them).
"""

import time
import pytest

from qpm.algebra import Params
from qpm.center import center_brute_force, center_dimension
from qpm.duality import Theory
from qpm.grothendieck import gr_class, gr_multiply
from qpm.linalg import SpanSolver
from qpm.modular import ModularAction
from qpm.reps import irreducible_labels
from qpm.verify import (run_suites, suite_drinfeld, suite_fusion,
                        suite_integral, suite_modular, suite_modules,
                        suite_presentation, suite_radford_images,
                        suite_ribbon)


def _report(num, name, ok):
    print(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {name}")
    assert ok, f"criterion {num} failed: {name}"


@pytest.fixture(scope="module")
def T13():
    return Theory(Params(1, 3))


def _suite_ok(checks):
    return all(passed for _, passed, _ in checks)


def test_criterion_1_center_dimension(T12, T23, T13):
    ok = True
    for th, want in ((T12, 5), (T13, 8), (T23, 20)):
        P = th.params
        assert center_dimension(P) == want
        bf = center_brute_force(P)
        ok = ok and len(bf) == want
        cb = th.center
        ok = ok and len(cb.ordered()) == want
        span_bf = SpanSolver([z.coeffs for z in bf], P.ctx)
        span_cb = SpanSolver([el.coeffs for _, el in cb.ordered()], P.ctx)
        ok = ok and span_cb.independent
        ok = ok and all(span_bf.contains(el.coeffs) for _, el in cb.ordered())
        ok = ok and all(span_cb.contains(z.coeffs) for z in bf)
    _report(1, "center dimension (1,2)->5 (1,3)->8 (2,3)->20, both routes agree", ok)


def test_criterion_2_modules(T12, T13, T23):
    ok = True
    for th in (T12, T13, T23):
        checks = suite_modules(th)
        ok = ok and _suite_ok(checks)
        P = th.params
        ok = ok and len(irreducible_labels(P)) == 2 * P.pp
    _report(2, "irreducible dims r*r', exact relations, projective dims", ok)


def test_criterion_3_fusion(T12, T23):
    ok = _suite_ok(suite_fusion(T12)) and _suite_ok(suite_fusion(T23))
    spot = gr_multiply(gr_class(T23.params, 1, 2, 1), gr_class(T23.params, 1, 2, 1))
    ok = ok and spot.mult == {(1, 1, 1): 2, (-1, 1, 1): 2}
    _report(3, "three-way fusion agreement at (1,2) and (2,3)", ok)


def test_criterion_4_presentation(T12, T13, T23):
    ok = all(_suite_ok(suite_presentation(th)) for th in (T12, T13, T23))
    _report(4, "polynomial presentation and the two-sided Casimir identity", ok)


def test_criterion_5_integral(T12, T13, T23):
    ok = all(_suite_ok(suite_integral(th)) for th in (T12, T13, T23))
    _report(5, "integral suite: lambda(Lambda)=1, invariances, balancing", ok)


def test_criterion_6_radford_images(T12, T13, T23):
    ok = all(_suite_ok(suite_radford_images(th)) for th in (T12, T13, T23))
    _report(6, "Radford-image decompositions coefficient-for-coefficient", ok)


def test_criterion_7_drinfeld_decompositions(T12, T23):
    ok = all(_suite_ok(suite_drinfeld(th)) for th in (T12, T23))
    _report(7, "Drinfeld-image decompositions for all labels", ok)


def test_criterion_8_ribbon(T12, T23):
    ok = all(_suite_ok(suite_ribbon(th)) for th in (T12, T23))
    _report(8, "ribbon eigenvalue table, Jordan split, tensor identity", ok)


def test_criterion_9_modular(T23):
    checks = suite_modular(T23)
    ok = _suite_ok(checks)
    ma = T23.params.cache["modular_action"]
    rep = ma.verify_subrepresentations()
    dims = [b["dim"] for b in rep["blocks"].values()]
    ok = ok and dims == [1, 3, 4, 6, 6] and sum(dims) == 20
    rel = ma.sl2z_relations()
    ok = ok and rel["ST3_S-2_scalar"] == T23.params.ctx.one
    _report(9, "modular suite: S^2=id, blocks 1+3+4+6+6, factorization,"
               " (ST)^3 S^-2 = 1", ok)


@pytest.mark.xfail(strict=True, reason="the Drinfeld image of the fusion "
                   "ring is not literally S-stable: its S-image is the span "
                   "of the balanced-trace Radford images, which omits the "
                   "unit; the verified facts are span equality, T-stability "
                   "and the iterated S,T-closure rank")
def test_criterion_9_literal_gr_closure(T23):
    ma = T23.params.cache.setdefault("modular_action", ModularAction(T23))
    assert ma.verify_grothendieck_subrep()["literal_st_closed"]


def test_criterion_10_transformations(T23):
    ma = T23.params.cache.setdefault("modular_action", ModularAction(T23))
    rep = ma.verify_transformations()
    ok = rep["ok"]
    ok = ok and ma.data.central_charge == 0
    ok = ok and ma.data.t_phase == T23.params.ctx.one
    _report(10, "transformation identities at (2,3); c = 0 and T-phase = 1", ok)


def test_criterion_11_runtime():
    t0 = time.time()
    ok12, _ = run_suites(1, 2, report=None)
    dt12 = time.time() - t0
    t0 = time.time()
    ok23, _ = run_suites(2, 3, report=None)
    dt23 = time.time() - t0
    ok = ok12 and ok23 and dt12 < 30 and dt23 < 900
    print(f"criterion 11 timing: (1,2) {dt12:.1f}s (<30s), "
          f"(2,3) {dt23:.1f}s (<900s)")
    _report(11, "full verification within the stated budgets", ok)
