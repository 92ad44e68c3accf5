"""q-characters: predicate, brute-force space, pseudotrace construction."""

import random

import pytest

from qpm.characters import (Functional, PseudotraceSpec, counit_functional,
                            is_qcharacter, qcharacter_space,
                            sigma_endomorphism)


@pytest.fixture(scope="module")
def cs23(T23):
    return T23.characters


@pytest.fixture(scope="module")
def cs12(T12):
    return T12.characters


def test_counts(cs12, cs23):
    assert cs12.dimension == 5
    assert cs23.dimension == 20


def test_counit_is_qcharacter(P23, cs23):
    eps = counit_functional(P23)
    assert is_qcharacter(eps)
    assert cs23.qtrace(1, 1, 1) == eps


def test_coordinate_functional_not_qcharacter(P23):
    bad = Functional(P23, {(1, 0, 0, 0, 0): P23.ctx.one})
    assert not is_qcharacter(bad)


def test_gamma_members_are_qcharacters(cs23):
    rng = random.Random(17)
    for kind, lab, f in cs23.entries:
        assert is_qcharacter(f, spot_checks=2, rng=rng), (kind, lab)


def test_trace_additivity(P23, cs23):
    from qpm.reps import direct_sum, cached_irreducible
    from qpm.characters import qtrace_char
    a = cached_irreducible(P23, 1, 2, 1)
    b = cached_irreducible(P23, -1, 1, 3)
    lhs = qtrace_char(direct_sum(a, b))
    rhs = qtrace_char(a) + qtrace_char(b)
    assert lhs == rhs


def test_brute_force_space(P12, cs12):
    basis = qcharacter_space(P12)
    assert len(basis) == 5
    from qpm.linalg import SpanSolver
    bs = SpanSolver([b.values for b in basis], P12.ctx)
    for _, _, f in cs12.entries:
        assert bs.contains(f.values)
    for b in basis:
        assert cs12.solver.contains(b.values)


def test_pseudotrace_constraints(P23):
    c = P23.ctx.one
    bad = PseudotraceSpec((1, 1), {("alpha", "up", "u"): c})  # missing partner
    with pytest.raises(ValueError):
        sigma_endomorphism(P23, bad)
    good = PseudotraceSpec((1, 1), {("alpha", "up", "u"): c, ("alpha", "up", "r"): c})
    module, sigma = sigma_endomorphism(P23, good)
    assert module.dim == 4 * 4 * P23.pp


def test_zero_sigma_gives_zero_functional(P23):
    from qpm.characters import trace_functional
    spec = PseudotraceSpec((1, 1), {})
    module, sigma = sigma_endomorphism(P23, spec)
    assert sigma.is_zero()
    gamma = trace_functional(module, sigma)
    assert gamma.is_zero()


def test_alpha_down_gives_trace_combination(P23, cs23):
    # only the diagonal-coefficient sigma: the functional is a combination
    # of irreducible balanced traces
    from qpm.characters import trace_functional
    from qpm.linalg import SpanSolver
    P = P23
    c = P.ctx.one
    spec = PseudotraceSpec((1, 1), {("alpha", "down", b): c for b in "urld"})
    module, sigma = sigma_endomorphism(P, spec)
    gamma = trace_functional(module, sigma)
    traces = [cs23.qtrace(1, 1, 1), cs23.qtrace(-1, 1, 1),
              cs23.qtrace(-1, 1, 2), cs23.qtrace(1, 1, 2)]
    ss = SpanSolver([t.values for t in traces], P.ctx)
    assert ss.contains(gamma.values)
    assert is_qcharacter(gamma)


def test_kac_sets(P23, cs23):
    sets = cs23.sets
    assert sets.I1 == ((1, 1),)
    assert set(sets.I) == {(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (0, 3)}
    assert len(sets.I_slash) == 2 and len(sets.I_bslash) == 3


def test_convolution_closure(P23, cs23):
    f1 = cs23.entries[2][2]
    f2 = cs23.entries[7][2]
    prod = f1.convolve(f2)
    assert cs23.solver.contains(prod.values)
    assert prod == f2.convolve(f1)


def test_functional_serialization(P23, cs23):
    f = cs23.entries[1][2]
    doc = f.to_json()
    assert Functional.from_json(P23, doc) == f


def test_boundary_block_resolution(P12, cs12):
    # at (1,2) only the row-boundary pseudotrace family is present
    kinds = [k for k, _ in cs12.labels()]
    assert kinds.count("nwse") == 1
    assert kinds.count("nesw") == 0
    assert kinds.count("upup") == 0
