"""Checker behavior: axiom detection, mutation oracles, derived laws."""

import pytest

import skelcat as sc
import skelcat.report as rp
from skelcat.errors import NonUnitalInput, NotACocycle


def pointed(n, N, omega=None):
    return sc.pointed_category(sc.PointedSpec(sc.cyclic_group(n), N, omega or {}))


def test_strict_one_object_category_passes():
    M = pointed(1, 1)
    assert sc.check_monoidal(M).passed


def test_every_enumerated_cocycle_passes(corpus):
    for label, M in corpus.monoidal:
        assert sc.check_monoidal(M).passed, label


def test_non_cocycle_rejected():
    # for Z/2 with N = 4 the value 1 on the free slot fails the pentagon
    with pytest.raises(NotACocycle):
        pointed(2, 4, {(1, 1, 1): 1})


def test_pentagon_counterexample_reevaluates(z2n4_braided):
    M = z2n4_braided.base
    a = dict(M.a)
    a[(1, 1, 1)] += 1
    broken = sc.MonoidalData(M.category, M.tensor, M.unit, a, M.l, M.r, True)
    report = sc.check_monoidal(broken)
    entry = report.entry(rp.PENT_A)
    assert not entry.passed
    u, v, w, x = entry.counterexample
    cat, ob, tm = M.category, M.tensor.obj_map, M.tensor.mor_map
    from skelcat.fincat import chain
    lhs = chain(cat, [tm[(a[(u, v, w)], cat.identity[x])],
                      a[(u, ob[(v, w)], x)],
                      tm[(cat.identity[u], a[(v, w, x)])]])
    rhs = chain(cat, [a[(ob[(u, v)], w, x)], a[(u, v, ob[(w, x)])]])
    assert lhs != rhs


def test_unitor_mutation_flips_exactly_triangle():
    M = pointed(2, 4)
    l = dict(M.l)
    l[1] += 1
    broken = sc.MonoidalData(M.category, M.tensor, M.unit, M.a, l, M.r, True)
    report = sc.check_monoidal(broken)
    assert not report.entry(rp.TRI_A).passed
    assert report.entry(rp.PENT_A).passed
    assert report.entry("nat.l").passed


def test_symmetric_trivial_braiding_passes():
    M = pointed(2, 2)
    beta = {(v, w): M.category.identity[M.tensor.obj_map[(v, w)]]
            for v in range(2) for w in range(2)}
    assert sc.check_braided(sc.BraidedData(M, beta)).passed


def test_braiding_mutation_fails_a_hexagon(z3_braided):
    from conftest import bump
    beta = dict(z3_braided.braiding)
    beta[(1, 2)] = bump(z3_braided.category, beta[(1, 2)])
    broken = sc.BraidedData(z3_braided.base, beta)
    report = sc.check_braided(broken)
    failing = {e.diagram for e in report.failing()}
    assert failing & {rp.BR_HEX_1, rp.BR_HEX_2}


def test_regular_module_passes(corpus):
    # the base acting on itself through the identity pair
    for label, B in corpus.braided[:6]:
        D = sc.psi_object(sc.self_action_pair(B))
        assert sc.check_module(D.module).passed, label


def test_module_mutation_fails_pentagon(z3_braided):
    D = sc.psi_object(sc.self_action_pair(z3_braided))
    m = dict(D.module.m)
    m[(1, 2, 1)] += 1
    broken = sc.ModuleData(D.module.base, D.module.carrier, D.module.action,
                           m, D.module.l_act)
    report = sc.check_module(broken)
    assert not report.entry(rp.PENT_M).passed


def test_modmon_alpha2_mutation_detected(z3_braided):
    from conftest import bump
    D = sc.psi_object(sc.self_action_pair(z3_braided))
    alpha2 = dict(D.alpha2)
    alpha2[(1, 1, 1)] = bump(D.carrier, alpha2[(1, 1, 1)])
    broken = sc.ModMonData(D.module, D.monoidal, D.alpha1, alpha2, True)
    report = sc.check_modmon(broken)
    failing = {e.diagram for e in report.failing()}
    assert failing & {rp.A2_A, rp.A2_M, rp.A1_A2, rp.BETA_ACT}


def test_identity_monoidal_functor_passes(corpus):
    _, M = corpus.monoidal[0]
    assert sc.check_monoidal_functor(sc.identity_monoidal_functor(M)).passed


def test_phi0_mutation_fails_unit_square(z3_braided):
    M = z3_braided.base
    ident = sc.identity_monoidal_functor(M)
    broken = sc.MonoidalFunctorData(ident.functor, M, M, ident.phi2,
                                    ident.phi0 + 1)
    report = sc.check_monoidal_functor(broken)
    assert not report.entry(rp.PHI0_L).passed


def test_braided_functor_inverse_braiding_fails(z3_braided):
    # the braiding c(g,h) = g*h is not symmetric; its inverse differs
    M = z3_braided.base
    inv_beta = {k: sc.invert_iso(M.category,
                                 z3_braided.braiding[(k[1], k[0])])
                for k in z3_braided.braiding}
    flipped = sc.BraidedData(M, inv_beta)
    assert sc.check_braided(flipped).passed
    ident = sc.identity_monoidal_functor(M)
    assert sc.check_braided_functor(ident, z3_braided, z3_braided).passed
    report = sc.check_braided_functor(ident, z3_braided, flipped)
    assert not report.entry(rp.BETA_PHI2).passed


def test_module_functor_witness_and_mutation(z3_braided):
    D = sc.psi_object(sc.self_action_pair(z3_braided))
    witness, report = sc.roundtrip_mmc_witness(D)
    assert report.passed
    mod = witness.module_part
    s = dict(mod.s)
    s[(1, 1)] += 1
    broken = sc.ModuleFunctorData(mod.functor, mod.source, mod.target, s)
    rep = sc.check_module_functor(broken)
    assert not rep.passed
    failing = {e.diagram for e in rep.failing()}
    assert failing & {rp.S_M, rp.S_LACT, "nat.s"}


def test_monoidal_nat_identity_and_mutation(z3_braided):
    M = z3_braided.base
    ident = sc.identity_monoidal_functor(M)
    eta = sc.identity_nat(ident.functor)
    assert sc.check_monoidal_nat(eta, ident, ident).passed
    comps = list(eta.components)
    comps[1] += 1
    broken = sc.NatTransfData(eta.source_functor, eta.target_functor,
                              tuple(comps))
    report = sc.check_monoidal_nat(broken, ident, ident)
    assert not report.entry(rp.NAT_TR_PHI2).passed


def test_module_nat_mutation(z3_braided):
    D = sc.psi_object(sc.self_action_pair(z3_braided))
    F = sc.identity_modmon_functor(D)
    eta = sc.identity_nat(F.functor)
    assert sc.check_module_nat(eta, F.module_part, F.module_part).passed
    comps = list(eta.components)
    comps[2] += 1
    broken = sc.NatTransfData(eta.source_functor, eta.target_functor,
                              tuple(comps))
    report = sc.check_module_nat(broken, F.module_part, F.module_part)
    assert not report.entry(rp.NAT_TR_S).passed


def test_derived_laws_follow_from_axioms(corpus):
    # implication property over the whole corpus, all levels
    for label, M in corpus.monoidal:
        assert sc.derived_laws_suite(M).passed, label
    for label, B in corpus.braided:
        assert sc.derived_laws_suite(B).passed, label
        D = sc.psi_object(sc.self_action_pair(B))
        assert sc.derived_laws_suite(D.module).passed, label
        assert sc.derived_laws_suite(D).passed, label


def test_nonunital_modmon_derived_subset(z3_braided):
    D = sc.psi_object(sc.self_action_pair(z3_braided))
    M = D.monoidal
    nu_mon = sc.MonoidalData(M.category, M.tensor, None, M.a, None, None, False)
    nu = sc.ModMonData(D.module, nu_mon, D.alpha1, D.alpha2, False)
    report = sc.derived_laws_suite(nu)
    assert report.passed
    assert report.has(rp.A1_LACT) and report.has(rp.A2_LACT)
    assert not report.has(rp.A1_R) and not report.has(rp.A2_L)
    assert sc.check_modmon(nu).passed
