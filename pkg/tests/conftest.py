import pytest

import skelcat as sc

GROUPS = [("Z1", 1), ("Z2", 2), ("Z3", 3)]
SCALARS = [2, 3, 4]


class Corpus:
    """Every generator-produced instance for the small groups and moduli.

    monoidal: (label, MonoidalData) for each admissible associator.
    braided:  (label, BraidedData) for each admissible (omega, c).
    pairs:    self-action pairs of the braided instances.
    """

    def __init__(self):
        self.monoidal = []
        self.braided = []
        for gname, n in GROUPS:
            G = sc.cyclic_group(n)
            for N in SCALARS:
                omegas = sc.enumerate_cocycles(G, N)
                for i, omega in enumerate(omegas):
                    label = f"{gname}.N{N}.w{i}"
                    self.monoidal.append(
                        (label, sc.pointed_category(sc.PointedSpec(G, N, omega))))
                    for j, c in enumerate(sc.enumerate_braidings(G, N, omega)):
                        self.braided.append(
                            (f"{label}.c{j}",
                             sc.pointed_braided(sc.PointedSpec(G, N, omega, c))))
        self.pairs = [(label, sc.self_action_pair(B))
                      for label, B in self.braided]


@pytest.fixture(scope="session")
def corpus():
    return Corpus()


@pytest.fixture(scope="session")
def z3_braided():
    c = {(g, h): (g * h) % 3 for g in range(3) for h in range(3)}
    return sc.pointed_braided(sc.PointedSpec(sc.cyclic_group(3), 3, {}, c))


@pytest.fixture(scope="session")
def z2n4_braided():
    c = {(1, 1): 2}
    return sc.pointed_braided(sc.PointedSpec(sc.cyclic_group(2), 4, {}, c))


@pytest.fixture(scope="session")
def z2n3_braided():
    return sc.pointed_braided(sc.PointedSpec(sc.cyclic_group(2), 3, {}, {}))


def build_campaign_bundle(name: str, V: sc.BraidedData) -> "sc.Bundle":
    """A bundle touching every mutable family kind: braided base, pair,
    module monoidal image, round-trip witnesses as pair-morphism and
    module-monoidal-functor records, and identity 2-morphisms."""
    from skelcat.bundle import BundleBuilder

    P = sc.self_action_pair(V)
    D = sc.psi_object(P)
    w, _ = sc.roundtrip_pair_witness(P)
    wit, _ = sc.roundtrip_mmc_witness(D)
    Dp = sc.psi_object(sc.pair_from_mmc(D))
    idm = sc.identity_pair_morphism(P)

    b = BundleBuilder(name)
    b.add_braided("V", V)
    b.add_pair("P", P)
    b.add_modmon("D", D)
    b.add_pair_morphism("w", w)
    b.add_pair_morphism("idP", idm)
    b.add_functor("wit", wit, D, Dp)
    vcat = V.category
    b.add_two_morphism("eta.pm", "pair_morphisms", "idP", "idP",
                       [vcat.identity[v] for v in vcat.objects])
    mcat = D.carrier
    b.add_two_morphism("eta.fn", "functors", "wit", "wit",
                       [mcat.identity[x] for x in mcat.objects])
    return b.build()


@pytest.fixture(scope="session")
def campaign_bundles(z3_braided, z2n3_braided):
    # the campaign avoids bases where a single-slot change can land on
    # another fully coherent structure (over Z/2 with an even scalar
    # modulus, shifting one component by the order-2 scalar is a
    # character twist and produces a valid bundle again)
    return [build_campaign_bundle("campaign-z3n3", z3_braided),
            build_campaign_bundle("campaign-z2n3", z2n3_braided)]


def bump(cat, f):
    """The next element of f's hom-set: a same-hom-set replacement."""
    hom = cat.hom(cat.mor_src[f], cat.mor_dst[f])
    return hom[(hom.index(f) + 1) % len(hom)]
