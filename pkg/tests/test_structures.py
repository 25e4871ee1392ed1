import pytest

import skelcat as sc
from skelcat.errors import (IndexOutOfRange, MalformedTable, NonUnitalInput)
from skelcat.structures import compose_monoidal_functors


def pointed(n, N, omega=None):
    return sc.pointed_category(sc.PointedSpec(sc.cyclic_group(n), N, omega or {}))


def test_validate_bifunctor_terminal_and_pointed():
    M = pointed(1, 2)
    assert sc.validate_bifunctor(M.tensor).passed
    M = pointed(3, 3)
    assert sc.validate_bifunctor(M.tensor).passed


def test_validate_bifunctor_perturbed_entry_fails():
    M = pointed(2, 2)
    mor_map = dict(M.tensor.mor_map)
    mor_map[(1, 1)] = (mor_map[(1, 1)] // 2) * 2 + (mor_map[(1, 1)] + 1) % 2
    broken = sc.BifunctorData(M.category, M.category, M.category,
                              M.tensor.obj_map, mor_map)
    report = sc.validate_bifunctor(broken)
    assert not report.passed
    assert not report.entry("bif.interchange").passed or \
        not report.entry("bif.id").passed


def test_component_lookup_and_range():
    M = pointed(2, 2, {(1, 1, 1): 1})
    assert sc.component(M.a, 1, 1, 1) == M.a[(1, 1, 1)]
    assert sc.component(M.l, 0) == M.l[0]
    with pytest.raises(IndexOutOfRange):
        sc.component(M.a, 9, 9, 9)


def test_psi_image_component_formulas(corpus):
    # alpha1 in a psi image equals the ambient associator at F(v);
    # l_act equals l after clearing phi0
    label, B = next((l, b) for l, b in corpus.braided if "Z3.N3" in l)
    P = sc.self_action_pair(B)
    D = sc.psi_object(P)
    T = P.target
    fo = P.functor.obj_map
    tcat = T.category
    for v in P.base.category.objects:
        for x in tcat.objects:
            for y in tcat.objects:
                assert sc.component(D.alpha1, v, x, y) == T.a[(fo[v], x, y)]
    inv_phi0 = sc.invert_iso(tcat, P.phi0)
    for x in tcat.objects:
        expected = tcat.composition[(T.l[x],
                                     T.tensor.mor_map[(inv_phi0,
                                                       tcat.identity[x])])]
        assert sc.component(D.module.l_act, x) == expected


def test_monoidal_construction_refuses_bad_substrate():
    M = pointed(2, 3)
    broken_comp = dict(M.category.composition)
    broken_comp[(1, 1)] = 1  # 1 + 1 = 1 breaks associativity against scalar 2
    bad_cat = sc.FinCategory(2, M.category.mor_src, M.category.mor_dst,
                             M.category.identity, broken_comp)
    assert not sc.validate_category(bad_cat).passed
    with pytest.raises(MalformedTable):
        sc.MonoidalData(bad_cat, sc.BifunctorData(
            bad_cat, bad_cat, bad_cat, M.tensor.obj_map, M.tensor.mor_map),
            M.unit, M.a, M.l, M.r, True)


def test_empty_category_rejected_at_monoidal_attachment():
    empty = sc.FinCategory(0, (), (), (), {})
    assert sc.validate_category(empty).passed  # a bare category may be empty
    with pytest.raises(MalformedTable):
        sc.MonoidalData(empty, sc.BifunctorData(empty, empty, empty, {}, {}),
                        None, {}, None, None, False)


def test_partial_family_rejected():
    M = pointed(2, 2)
    a = dict(M.a)
    del a[(1, 1, 1)]
    with pytest.raises(MalformedTable):
        sc.MonoidalData(M.category, M.tensor, M.unit, a, M.l, M.r, True)


def test_non_unital_shape():
    M = pointed(2, 3)
    nu = sc.MonoidalData(M.category, M.tensor, None, M.a, None, None, False)
    assert not nu.unital
    report = sc.check_monoidal(nu)
    assert report.passed
    assert not report.has("tri.a")
    with pytest.raises(NonUnitalInput):
        sc.check_monoidal(nu, diagrams={"tri.a"})
    with pytest.raises(NonUnitalInput):
        sc.BraidedData(nu, {})
    with pytest.raises(MalformedTable):
        sc.MonoidalData(M.category, M.tensor, M.unit, M.a, M.l, M.r, False)


def test_braided_construction_checks_endpoints():
    M = pointed(2, 2)
    beta = {(v, w): M.category.identity[M.tensor.obj_map[(v, w)]]
            for v in range(2) for w in range(2)}
    assert sc.BraidedData(M, beta)
    bad = dict(beta)
    del bad[(1, 1)]
    with pytest.raises(MalformedTable):
        sc.BraidedData(M, bad)


def test_compose_monoidal_functors_formula(corpus):
    _, B = corpus.braided[0]
    M = B.base
    ident = sc.identity_monoidal_functor(M)
    comp = compose_monoidal_functors(ident, ident)
    assert comp.phi2 == ident.phi2
    assert comp.phi0 == ident.phi0


def test_modmon_unital_flag_must_match(z3_braided):
    P = sc.self_action_pair(z3_braided)
    D = sc.psi_object(P)
    with pytest.raises(MalformedTable):
        sc.ModMonData(D.module, D.monoidal, D.alpha1, D.alpha2, False)
