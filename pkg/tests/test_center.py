import pytest

import skelcat as sc
from skelcat.center import composite_half_braiding
from skelcat.errors import SearchSpaceExceeded, SourceTargetMismatch


def pointed(n, N, omega=None):
    return sc.pointed_category(sc.PointedSpec(sc.cyclic_group(n), N, omega or {}))


def additive_maps(n, N):
    """Independent counting oracle: maps b with b(x)+b(y) = b(x*y)."""
    import itertools
    count = 0
    for values in itertools.product(range(N), repeat=n):
        ok = all((values[x] + values[y]) % N == values[(x + y) % n]
                 for x in range(n) for y in range(n))
        count += ok
    return count


def test_unit_half_braiding_always_found():
    for (n, N) in [(1, 2), (2, 2), (2, 4), (3, 3)]:
        M = pointed(n, N)
        canonical = sc.unit_half_braiding(M)
        found = sc.enumerate_half_braidings(M, M.unit)
        assert any(hb.key() == canonical.key() for hb in found)


@pytest.mark.parametrize("n,N,per_object", [(2, 2, 2), (2, 4, 2), (3, 3, 3)])
def test_half_braiding_counts_vs_additive_map_oracle(n, N, per_object):
    M = pointed(n, N)
    for t in M.category.objects:
        found = sc.enumerate_half_braidings(M, t)
        assert len(found) == per_object
    assert per_object == additive_maps(n, N)


def test_enumeration_is_lexicographic(z2n4_braided):
    M = z2n4_braided.base
    found = sc.enumerate_half_braidings(M, 1)
    keys = [tuple(hb.components[x] for x in M.category.objects)
            for hb in found]
    assert keys == sorted(keys)


def test_search_cap():
    M = pointed(3, 3)
    with pytest.raises(SearchSpaceExceeded):
        sc.enumerate_half_braidings(M, 0, cap=2)


def test_center_counts_and_validity():
    M = pointed(1, 2)
    z = sc.drinfeld_center(M)
    assert len(z.objects) == 1
    for (n, N, expect) in [(2, 2, 4), (3, 3, 9)]:
        z = sc.drinfeld_center(pointed(n, N))
        assert len(z.objects) == expect
        assert sc.check_monoidal(z.monoidal).passed
        assert sc.check_braided(z.braided).passed
        assert sc.derived_laws_suite(z.braided).passed
        assert sc.validate_functor(z.forgetful).passed


def test_forgetful_functor_strict_monoidal():
    z = sc.drinfeld_center(pointed(2, 2))
    zc = z.category
    tcat = z.base.category
    # the tensor of carriers is the carrier of the tensor on the nose,
    # so identity components make the forgetful functor strict monoidal
    phi2 = {(i, j): tcat.identity[z.forgetful.obj_map[
        z.monoidal.tensor.obj_map[(i, j)]]]
        for i in zc.objects for j in zc.objects}
    phi0 = tcat.identity[z.base.unit]
    strict = sc.MonoidalFunctorData(z.forgetful, z.monoidal, z.base,
                                    phi2, phi0)
    assert sc.check_monoidal_functor(strict).passed


def test_center_hom_sets_filtered():
    # morphisms exist only between equal half-braidings on one carrier
    z = sc.drinfeld_center(pointed(2, 4))
    zc = z.category
    for i, zi in enumerate(z.objects):
        for j, zj in enumerate(z.objects):
            hom = zc.hom(i, j)
            if zi.carrier != zj.carrier or zi.components != zj.components:
                assert hom == ()
            else:
                assert len(hom) == 4


def test_center_morphism_square():
    M = pointed(2, 4)
    hbs = sc.enumerate_half_braidings(M, 0)
    assert len(hbs) == 2
    ident = M.category.identity[0]
    assert sc.check_center_morphism(M, ident, hbs[0], hbs[0])
    # scalars are central: any endo between EQUAL half-braidings passes
    assert sc.check_center_morphism(M, 1, hbs[0], hbs[0])
    # between the two different half-braidings every candidate fails
    assert not sc.check_center_morphism(M, ident, hbs[0], hbs[1])
    with pytest.raises(SourceTargetMismatch):
        sc.check_center_morphism(M, M.category.identity[1], hbs[0], hbs[0])


def test_tensor_matches_rederived_composite():
    z = sc.drinfeld_center(pointed(3, 3))
    for i, zi in enumerate(z.objects):
        for j, zj in enumerate(z.objects):
            k = z.monoidal.tensor.obj_map[(i, j)]
            assert composite_half_braiding(z.base, zi, zj).key() == \
                z.objects[k].key()


def test_validate_pair_detects_broken_lift(z2n4_braided):
    P = sc.self_action_pair(z2n4_braided)
    assert sc.validate_pair(P).passed
    # replace the lift on object 1 by the other valid half-braiding
    M = z2n4_braided.base
    hbs = sc.enumerate_half_braidings(M, 1)
    current = P.lift[1]
    other = next(h for h in hbs if h.key() != current.key())
    lift = dict(P.lift)
    lift[1] = other
    broken = sc.PairData(P.base, P.target, P.functor, lift, P.phi2, P.phi0)
    report = sc.validate_pair(broken)
    assert not report.passed
    failing = {e.diagram for e in report.failing()}
    # the lift stops matching the braiding and the center-morphism data
    assert failing & {"center-sq.F", "half-br.on⊗", "β&φ₂"}


def test_pair_morphism_identity_and_mutation(z3_braided):
    P = sc.self_action_pair(z3_braided)
    idm = sc.identity_pair_morphism(P)
    assert sc.check_pair_morphism(P, P, idm).passed
    gamma = list(idm.gamma.components)
    hom = P.target.category.hom(P.functor.obj_map[1], P.functor.obj_map[1])
    gamma[1] = hom[(hom.index(gamma[1]) + 1) % len(hom)]
    broken = sc.pair_morphism(P, P, idm.monoidal, gamma)
    report = sc.check_pair_morphism(P, P, broken)
    assert not report.passed


def test_pair_2morphism_identity_and_mutation(z3_braided):
    P = sc.self_action_pair(z3_braided)
    idm = sc.identity_pair_morphism(P)
    tcat = P.target.category
    eta = sc.NatTransfData(idm.monoidal.functor, idm.monoidal.functor,
                           tuple(tcat.identity[x] for x in tcat.objects))
    assert sc.check_pair_2morphism(eta, idm, idm).passed
    comps = list(eta.components)
    hom = tcat.hom(0, 0)
    comps[0] = hom[(hom.index(comps[0]) + 1) % len(hom)]
    broken = sc.NatTransfData(eta.source_functor, eta.target_functor,
                              tuple(comps))
    report = sc.check_pair_2morphism(broken, idm, idm)
    assert not report.passed
    assert not report.entry("nat.tr.&γ").passed


def test_compose_pair_morphisms_with_identity(z3_braided):
    P = sc.self_action_pair(z3_braided)
    idm = sc.identity_pair_morphism(P)
    w, _ = sc.roundtrip_pair_witness(P)
    left = sc.compose_pair_morphisms(idm, w)
    assert left.gamma.components == w.gamma.components
    assert sc.check_pair_morphism(P, w.target, left).passed
    # associativity as exact tables
    idm2 = sc.identity_pair_morphism(w.target)
    a = sc.compose_pair_morphisms(sc.compose_pair_morphisms(idm, w), idm2)
    b = sc.compose_pair_morphisms(idm, sc.compose_pair_morphisms(w, idm2))
    assert a.gamma.components == b.gamma.components
    assert a.monoidal.phi2 == b.monoidal.phi2
