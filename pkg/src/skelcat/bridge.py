"""Translation between pairs and module monoidal categories.

psi_object turns a pair into a module monoidal category by letting the
base act through the functor; pair_from_mmc goes the other way by
acting on the monoidal unit.  Round-trip witnesses, the hom-level
correspondence between action coherences and module functor
constraints, and promotion of module monoidal structure along an
adjoint equivalence complete the picture.  Images share the carrier
category with their input by reference; only structure tables are new.
"""

from __future__ import annotations

from dataclasses import dataclass

from .center import (PairData, PairMorphismData, check_pair_morphism,
                     compose_pair_morphisms, identity_pair_morphism,
                     pair_morphism)
from .coherence import (check_modmon_functor, check_module_functor,
                        check_monoidal_functor)
from .errors import (InternalInconsistency, NonUnitalInput, NotFullyFaithful,
                     NotInvertible, SourceTargetMismatch, ZigZagViolation)
from .fincat import (FinCategory, FunctorData, NatTransfData, chain,
                     compose_functors, identity_functor, invert_iso,
                     validate_nat_transf)
from .report import ZIG_ZAG, DiagramReport, entry_for
from .structures import (BifunctorData, ModMonData, ModMonFunctorData,
                         ModuleData, ModuleFunctorData, MonoidalData,
                         MonoidalFunctorData, identity_modmon_functor,
                         identity_monoidal_functor)


def _inv(cat: FinCategory, f: int) -> int:
    try:
        return invert_iso(cat, f)
    except NotInvertible as exc:
        raise InternalInconsistency(str(exc)) from None


def psi_object(P: PairData) -> ModMonData:
    """Module monoidal structure on the pair's target: the base acts by
    v . m = F(v) (x) m, with the mixed associators built from the
    ambient associator, the monoidal structure of F and the lifted
    half-braidings.  Cached per pair, so repeated calls share tables."""
    cached = getattr(P, "_psi_image", None)
    if cached is not None:
        return cached
    V, T = P.base, P.target
    vcat, tcat = V.category, T.category
    fo, fm = P.functor.obj_map, P.functor.mor_map
    comp, tm, ob = tcat.composition, T.tensor.mor_map, T.tensor.obj_map

    action = BifunctorData(
        vcat, tcat, tcat,
        {(v, x): ob[(fo[v], x)] for v in vcat.objects for x in tcat.objects},
        {(f, g): tm[(fm[f], g)] for f in vcat.morphisms for g in tcat.morphisms})

    m = {}
    for v in vcat.objects:
        for w in vcat.objects:
            inv_phi2 = _inv(tcat, P.phi2[(v, w)])
            for x in tcat.objects:
                m[(v, w, x)] = comp[(T.a[(fo[v], fo[w], x)],
                                     tm[(inv_phi2, tcat.identity[x])])]
    inv_phi0 = _inv(tcat, P.phi0)
    l_act = {x: comp[(T.l[x], tm[(inv_phi0, tcat.identity[x])])]
             for x in tcat.objects}

    alpha1 = {(v, x, y): T.a[(fo[v], x, y)]
              for v in vcat.objects for x in tcat.objects for y in tcat.objects}
    alpha2 = {}
    for v in vcat.objects:
        lift_v = P.lift[v].components
        for x in tcat.objects:
            inv_beta = _inv(tcat, lift_v[x])
            for y in tcat.objects:
                alpha2[(v, x, y)] = chain(tcat, [
                    _inv(tcat, T.a[(x, fo[v], y)]),
                    tm[(inv_beta, tcat.identity[y])],
                    T.a[(fo[v], x, y)],
                ])

    module = ModuleData(V, tcat, action, m, l_act)
    D = ModMonData(module, T, alpha1, alpha2, True)
    object.__setattr__(P, "_psi_image", D)
    return D


def psi_morphism(M: PairMorphismData) -> ModMonFunctorData:
    """Module monoidal functor with the same monoidal part and the
    module constraint phi2 . (gamma (x) id)."""
    src_D = psi_object(M.source)
    dst_D = psi_object(M.target)
    tcat2 = M.target.target.category
    comp, tm2 = tcat2.composition, M.target.target.tensor.mor_map
    fo = M.source.functor.obj_map
    go = M.monoidal.functor.obj_map
    gam = M.gamma.components
    scat = M.source.target.category

    s = {}
    for v in M.source.base.category.objects:
        gv = gam[v]
        for x in scat.objects:
            s[(v, x)] = comp[(M.monoidal.phi2[(fo[v], x)],
                              tm2[(gv, tcat2.identity[go[x]])])]
    module_part = ModuleFunctorData(M.monoidal.functor, src_D.module,
                                    dst_D.module, s)
    return ModMonFunctorData(M.monoidal, module_part)


def psi_2morphism(eta: NatTransfData) -> NatTransfData:
    """Identity on 2-morphisms: the very same component table."""
    return eta


def pair_from_mmc(D: ModMonData) -> PairData:
    """Pair on the carrier: F acts on the monoidal unit, the lift
    braids through the canonical unit half-braiding, and phi2/phi0 are
    assembled from the module structure.  Cached per input."""
    cached = getattr(D, "_pair_image", None)
    if cached is not None:
        return cached
    if not D.unital:
        raise NonUnitalInput("only unital data yields a pair")
    V = D.base
    T = D.monoidal
    vcat, mcat = V.category, D.carrier
    comp, ob = mcat.composition, T.tensor.obj_map
    am, aob = D.module.action.mor_map, D.module.action.obj_map
    e = T.unit

    functor = FunctorData(
        vcat, mcat,
        tuple(aob[(v, e)] for v in vcat.objects),
        tuple(am[(f, mcat.identity[e])] for f in vcat.morphisms))

    # beta_{1,t} = r_t^-1 . l_t
    beta1 = {t: comp[(_inv(mcat, T.r[t]), T.l[t])] for t in mcat.objects}

    from .center import HalfBraiding
    lift = {}
    for v in vcat.objects:
        idv = vcat.identity[v]
        comps = {}
        for t in mcat.objects:
            comps[t] = chain(mcat, [
                D.alpha1[(v, e, t)],
                am[(idv, beta1[t])],
                _inv(mcat, D.alpha2[(v, t, e)]),
            ])
        lift[v] = HalfBraiding(functor.obj_map[v], comps)

    ee = ob[(e, e)]
    phi2 = {}
    for v in vcat.objects:
        idv = vcat.identity[v]
        for w in vcat.objects:
            phi2[(v, w)] = chain(mcat, [
                D.alpha1[(v, e, functor.obj_map[w])],
                am[(idv, D.alpha2[(w, e, e)])],
                _inv(mcat, D.module.m[(v, w, ee)]),
                am[(vcat.identity[V.base.tensor.obj_map[(v, w)]], T.r[e])],
            ])
    phi0 = _inv(mcat, D.module.l_act[e])

    P = PairData(V, T, functor, lift, phi2, phi0)
    object.__setattr__(D, "_pair_image", P)
    return P


def roundtrip_mmc_witness(D: ModMonData):
    """Identity-carried functor from D to the round-trip image, with
    s = (id . l) after the mixed associator at the unit; returns it
    with its full checker report."""
    Dp = psi_object(pair_from_mmc(D))
    mcat = D.carrier
    am = D.module.action.mor_map
    e = D.monoidal.unit

    mon = identity_monoidal_functor(D.monoidal)
    s = {}
    for v in D.base.category.objects:
        idv = D.base.category.identity[v]
        for m in mcat.objects:
            s[(v, m)] = chain(mcat, [
                D.alpha1[(v, e, m)],
                am[(idv, D.monoidal.l[m])],
            ])
    module_part = ModuleFunctorData(mon.functor, D.module, Dp.module, s)
    witness = ModMonFunctorData(mon, module_part)
    report = DiagramReport.merge(
        check_monoidal_functor(mon),
        check_module_functor(module_part),
        check_modmon_functor(witness, D, Dp))
    return witness, report


def roundtrip_pair_witness(P: PairData):
    """Identity-carried morphism of pairs from P to the round-trip
    image, with gamma = r at F(v); returns it with its checker report."""
    Pp = pair_from_mmc(psi_object(P))
    T = P.target
    G = identity_monoidal_functor(T)
    gamma = tuple(T.r[P.functor.obj_map[v]] for v in P.base.category.objects)
    witness = pair_morphism(P, Pp, G, gamma)
    return witness, check_pair_morphism(P, Pp, witness)


def gamma_from_s(F: ModMonFunctorData, P: PairData, Q: PairData) -> PairMorphismData:
    """Recover the action coherence from the module constraint at the
    unit: the inverse of psi on 1-morphisms."""
    if F.monoidal_part.source is not P.target \
            or F.monoidal_part.target is not Q.target:
        raise SourceTargetMismatch(
            "functor does not run between the images of these pairs")
    tcat2 = Q.target.category
    tm2 = Q.target.tensor.mor_map
    r2 = Q.target.r
    go = F.functor.obj_map
    e = P.target.unit
    phi0 = F.phi0

    comps = []
    for v in P.base.category.objects:
        fpv = Q.functor.obj_map[v]
        gfv = go[P.functor.obj_map[v]]
        comps.append(chain(tcat2, [
            invert_iso(tcat2, r2[fpv]),
            tm2[(tcat2.identity[fpv], phi0)],
            F.s[(v, e)],
            invert_iso(tcat2, F.phi2[(P.functor.obj_map[v], e)]),
            tm2[(tcat2.identity[gfv], invert_iso(tcat2, phi0))],
            r2[gfv],
        ]))
    return pair_morphism(P, Q, F.monoidal_part, comps)


def compose_modmon_functors(F: ModMonFunctorData,
                            G: ModMonFunctorData) -> ModMonFunctorData:
    """F followed by G, sharing one composed underlying functor."""
    from .structures import compose_module_functors, compose_monoidal_functors
    mon = compose_monoidal_functors(F.monoidal_part, G.monoidal_part)
    mod = compose_module_functors(F.module_part, G.module_part)
    mod = ModuleFunctorData(mon.functor, mod.source, mod.target, mod.s)
    return ModMonFunctorData(mon, mod)


def _functor_tables_diff(A: FunctorData, B: FunctorData):
    if A.obj_map != B.obj_map:
        for x, (p, q) in enumerate(zip(A.obj_map, B.obj_map)):
            if p != q:
                return ("obj", x)
    if A.mor_map != B.mor_map:
        for f, (p, q) in enumerate(zip(A.mor_map, B.mor_map)):
            if p != q:
                return ("mor", f)
    return None


def _modmon_functor_tables_diff(A: ModMonFunctorData, B: ModMonFunctorData):
    d = _functor_tables_diff(A.functor, B.functor)
    if d is not None:
        return d
    for key in sorted(A.phi2):
        if A.phi2[key] != B.phi2.get(key):
            return ("φ₂",) + key
    if A.phi0 != B.phi0:
        return ("φ₀",)
    for key in sorted(A.s):
        if A.s[key] != B.s.get(key):
            return ("s",) + key
    return None


def check_psi_strictness(M: PairMorphismData,
                         Mp: PairMorphismData) -> DiagramReport:
    """psi of a composite equals the composite of the psi images, as
    exact tables; psi of an identity is an identity."""
    left = psi_morphism(compose_pair_morphisms(M, Mp))
    right = compose_modmon_functors(psi_morphism(M), psi_morphism(Mp))
    compos = _modmon_functor_tables_diff(left, right)

    ident = _modmon_functor_tables_diff(
        psi_morphism(identity_pair_morphism(M.source)),
        identity_modmon_functor(psi_object(M.source)))

    return DiagramReport((
        entry_for("psi.compos", compos),
        entry_for("psi.id", ident),
    ))


@dataclass(frozen=True, eq=False)
class AdjointEquivalenceData:
    F: FunctorData
    G: FunctorData
    eta: NatTransfData
    eps: NatTransfData

    def __post_init__(self):
        if self.F.source is not self.G.target or self.F.target is not self.G.source:
            raise SourceTargetMismatch("adjunction endpoints do not line up")
        for x in self.F.source.objects:
            invert_iso(self.F.source, self.eta.components[x])
        for y in self.F.target.objects:
            invert_iso(self.F.target, self.eps.components[y])


def adjoint_equivalence(F: FunctorData, G: FunctorData, eta_components,
                        eps_components) -> AdjointEquivalenceData:
    eta = NatTransfData(identity_functor(F.source), compose_functors(F, G),
                        tuple(eta_components))
    eps = NatTransfData(compose_functors(G, F), identity_functor(F.target),
                        tuple(eps_components))
    return AdjointEquivalenceData(F, G, eta, eps)


def check_adjoint_equivalence(A: AdjointEquivalenceData) -> DiagramReport:
    """Naturality of unit and counit plus both zig-zag identities."""
    entries = list(validate_nat_transf(A.eta).prefixed("η.").entries)
    entries.extend(validate_nat_transf(A.eps).prefixed("ε.").entries)

    scat, tcat = A.F.source, A.F.target
    bad = None
    for c in scat.objects:
        fc = A.F.obj_map[c]
        lhs = tcat.composition[(A.eps.components[fc],
                                A.F.mor_map[A.eta.components[c]])]
        if lhs != tcat.identity[fc]:
            bad = ("F", c)
            break
    if bad is None:
        for d in tcat.objects:
            gd = A.G.obj_map[d]
            lhs = scat.composition[(A.G.mor_map[A.eps.components[d]],
                                    A.eta.components[gd])]
            if lhs != scat.identity[gd]:
                bad = ("G", d)
                break
    entries.append(entry_for(ZIG_ZAG, bad))
    return DiagramReport(tuple(entries))


def _hom_inverse(F: FunctorData, a: int, b: int) -> dict:
    """Invert F on one hom-set; fails unless F is bijective there."""
    table = {}
    for f in F.source.hom(a, b):
        ff = F.mor_map[f]
        if ff in table:
            raise NotFullyFaithful(
                f"hom({a},{b}) collapses under the functor at {f}")
        table[ff] = f
    fa, fb = F.obj_map[a], F.obj_map[b]
    if set(table) != set(F.target.hom(fa, fb)):
        raise NotFullyFaithful(f"hom({a},{b}) does not map onto hom({fa},{fb})")
    return table


def promote_equivalence(F: ModMonFunctorData,
                        A: AdjointEquivalenceData) -> ModMonFunctorData:
    """Module monoidal structure on the quasi-inverse of F, computed by
    inverting F on hom-sets."""
    if A.F is not F.functor and (
            A.F.source is not F.functor.source
            or A.F.target is not F.functor.target
            or A.F.obj_map != F.functor.obj_map
            or A.F.mor_map != F.functor.mor_map):
        raise SourceTargetMismatch(
            "adjoint equivalence does not contain this functor")
    report = check_adjoint_equivalence(A)
    if not report.entry(ZIG_ZAG).passed:
        raise ZigZagViolation(
            f"zig-zag fails at {report.entry(ZIG_ZAG).counterexample}")

    scat, tcat = F.functor.source, F.functor.target
    src_mon, dst_mon = F.monoidal_part.source, F.monoidal_part.target
    src_mod, dst_mod = F.module_part.source, F.module_part.target
    go = A.G.obj_map
    eps = A.eps.components
    comp = tcat.composition
    tm2 = dst_mon.tensor.mor_map
    am2 = dst_mod.action.mor_map
    ob2 = dst_mon.tensor.obj_map
    aob2 = dst_mod.action.obj_map
    ob1 = src_mon.tensor.obj_map
    aob1 = src_mod.action.obj_map

    inverses = {}

    def f_inverse(a, b, f):
        key = (a, b)
        if key not in inverses:
            inverses[key] = _hom_inverse(F.functor, a, b)
        try:
            return inverses[key][f]
        except KeyError:
            raise NotFullyFaithful(
                f"morphism {f} has no preimage in hom({a},{b})") from None

    # fully-faithfulness is a stated precondition: verify it globally
    for a in scat.objects:
        for b in scat.objects:
            _hom_inverse(F.functor, a, b)

    phi2 = {}
    for m in tcat.objects:
        for n in tcat.objects:
            expr = chain(tcat, [
                invert_iso(tcat, F.phi2[(go[m], go[n])]),
                tm2[(eps[m], eps[n])],
                invert_iso(tcat, eps[ob2[(m, n)]]),
            ])
            phi2[(m, n)] = f_inverse(ob1[(go[m], go[n])], go[ob2[(m, n)]], expr)

    phi0 = None
    if F.phi0 is not None:
        expr = comp[(invert_iso(tcat, eps[dst_mon.unit]),
                     invert_iso(tcat, F.phi0))]
        phi0 = f_inverse(src_mon.unit, go[dst_mon.unit], expr)

    s = {}
    vcat = src_mod.base.category
    for v in vcat.objects:
        idv = vcat.identity[v]
        for m in tcat.objects:
            expr = chain(tcat, [
                invert_iso(tcat, F.s[(v, go[m])]),
                am2[(idv, eps[m])],
                invert_iso(tcat, eps[aob2[(v, m)]]),
            ])
            s[(v, m)] = f_inverse(aob1[(v, go[m])], go[aob2[(v, m)]], expr)

    mon = MonoidalFunctorData(A.G, dst_mon, src_mon, phi2, phi0)
    mod = ModuleFunctorData(A.G, dst_mod, src_mod, s)
    return ModMonFunctorData(mon, mod)
