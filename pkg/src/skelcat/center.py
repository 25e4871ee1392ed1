"""Drinfeld center by exhaustive half-braiding search, and pairs.

A half-braiding on t assigns to every object x an isomorphism
t(x)x -> x(x)t, natural in x and satisfying the half-braiding hexagon.
The center has these as objects; its hom-sets are the morphisms of the
base that commute with the half-braidings.  A pair is a monoidal
functor F from a braided base into a monoidal category together with a
per-object half-braiding family lifting it into the center.

Convention: the half-braiding runs t(x)x -> x(x)t; the mirror
convention is not supported.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .coherence import _wrap, check_monoidal_functor, check_monoidal_nat
from .errors import (InternalInconsistency, MalformedTable,
                     SearchSpaceExceeded, SourceTargetMismatch)
from .fincat import (FinCategory, FunctorData, NatTransfData, compose_functors,
                     invert_iso, is_iso, validate_functor, validate_nat_transf)
from .report import (BETA_PHI2, GAMMA_BETA, HALF_BR_HEX, HALF_BR_TENSOR,
                     HALF_BR_UNIT, NAT_TR_GAMMA, DiagramReport, entry_for)
from .structures import (BifunctorData, BraidedData, MonoidalData,
                         MonoidalFunctorData, compose_monoidal_functors)


def default_cap() -> int:
    return int(os.environ.get("SKELCAT_CAP", 10 ** 6))


@dataclass(frozen=True, eq=False)
class HalfBraiding:
    carrier: int
    components: dict

    def key(self) -> tuple:
        return (self.carrier, tuple(sorted(self.components.items())))


def unit_half_braiding(T: MonoidalData) -> HalfBraiding:
    """The canonical half-braiding r^-1 . l on the unit object."""
    cat = T.category
    comps = {x: cat.composition[(invert_iso(cat, T.r[x]), T.l[x])]
             for x in cat.objects}
    return HalfBraiding(T.unit, comps)


def composite_half_braiding(T: MonoidalData, hb1: HalfBraiding,
                            hb2: HalfBraiding) -> HalfBraiding:
    """Half-braiding on the tensor of two carriers, component by component."""
    cat = T.category
    comp, tm, ob, a = cat.composition, T.tensor.mor_map, T.tensor.obj_map, T.a
    t, tp = hb1.carrier, hb2.carrier
    comps = {}
    for x in cat.objects:
        leg = a[(t, tp, x)]
        leg = comp[(tm[(cat.identity[t], hb2.components[x])], leg)]
        leg = comp[(invert_iso(cat, a[(t, x, tp)]), leg)]
        leg = comp[(tm[(hb1.components[x], cat.identity[tp])], leg)]
        leg = comp[(a[(x, t, tp)], leg)]
        comps[x] = leg
    return HalfBraiding(ob[(t, tp)], comps)


def _half_braiding_natural(T: MonoidalData, hb: HalfBraiding):
    cat = T.category
    comp, tm = cat.composition, T.tensor.mor_map
    idt = cat.identity[hb.carrier]
    for f in cat.morphisms:
        x, y = cat.mor_src[f], cat.mor_dst[f]
        if comp[(tm[(f, idt)], hb.components[x])] != \
                comp[(hb.components[y], tm[(idt, f)])]:
            return (f,)
    return None


def half_braiding_hexagon_at(T: MonoidalData, hb: HalfBraiding,
                             x: int, y: int) -> bool:
    cat = T.category
    comp, tm, ob, a = cat.composition, T.tensor.mor_map, T.tensor.obj_map, T.a
    t = hb.carrier
    b = hb.components
    lhs = comp[(b[ob[(x, y)]], a[(t, x, y)])]
    lhs = comp[(a[(x, y, t)], lhs)]
    rhs = comp[(a[(x, t, y)], tm[(b[x], cat.identity[y])])]
    rhs = comp[(tm[(cat.identity[x], b[y])], rhs)]
    return lhs == rhs


def _half_braiding_hexagon(T: MonoidalData, hb: HalfBraiding):
    for x in T.category.objects:
        for y in T.category.objects:
            if not half_braiding_hexagon_at(T, hb, x, y):
                return (x, y)
    return None


def center_square_at(T: MonoidalData, f: int, src_hb: HalfBraiding,
                     dst_hb: HalfBraiding, x: int) -> bool:
    cat = T.category
    comp, tm = cat.composition, T.tensor.mor_map
    idx = cat.identity[x]
    return comp[(tm[(idx, f)], src_hb.components[x])] == \
        comp[(dst_hb.components[x], tm[(f, idx)])]


def check_center_morphism(T: MonoidalData, f: int, src_hb: HalfBraiding,
                          dst_hb: HalfBraiding) -> bool:
    """Does f commute with the two half-braidings at every object?"""
    cat = T.category
    if cat.mor_src[f] != src_hb.carrier or cat.mor_dst[f] != dst_hb.carrier:
        raise SourceTargetMismatch(
            f"morphism {f} does not run between the two carriers")
    return all(center_square_at(T, f, src_hb, dst_hb, x) for x in cat.objects)


def enumerate_half_braidings(T: MonoidalData, t: int,
                             cap: int | None = None) -> list:
    """Every half-braiding on t, by depth-first search over component
    assignments in ascending object order, with naturality and hexagon
    constraints re-checked as soon as their components are assigned.

    Results come out in lexicographic order of component choices.
    """
    cap = default_cap() if cap is None else cap
    cat = T.category
    ob = T.tensor.obj_map
    iso_sets = []
    size = 1
    for x in cat.objects:
        isos = [f for f in cat.hom(ob[(t, x)], ob[(x, t)]) if is_iso(cat, f)]
        iso_sets.append(isos)
        size *= len(isos)
    if size > cap:
        raise SearchSpaceExceeded(size, cap)
    if size == 0:
        return []

    n = cat.n_objects
    # constraints indexed by the largest object they mention
    nat_by_depth = [[] for _ in range(n)]
    for f in cat.morphisms:
        x, y = cat.mor_src[f], cat.mor_dst[f]
        nat_by_depth[max(x, y)].append(f)
    hex_by_depth = [[] for _ in range(n)]
    for x in cat.objects:
        for y in cat.objects:
            hex_by_depth[max(x, y, ob[(x, y)])].append((x, y))

    comp, tm = cat.composition, T.tensor.mor_map
    idt = cat.identity[t]
    comps = {}
    found = []

    def consistent(depth):
        for f in nat_by_depth[depth]:
            x, y = cat.mor_src[f], cat.mor_dst[f]
            if comp[(tm[(f, idt)], comps[x])] != comp[(comps[y], tm[(idt, f)])]:
                return False
        hb = HalfBraiding(t, comps)
        for (x, y) in hex_by_depth[depth]:
            if not half_braiding_hexagon_at(T, hb, x, y):
                return False
        return True

    def walk(x):
        if x == n:
            found.append(HalfBraiding(t, dict(comps)))
            return
        for f in iso_sets[x]:
            comps[x] = f
            if consistent(x):
                walk(x + 1)
        del comps[x]

    walk(0)
    return found


@dataclass(frozen=True, eq=False)
class CenterCategory:
    base: MonoidalData
    objects: tuple
    category: FinCategory
    monoidal: MonoidalData
    braided: BraidedData
    forgetful: FunctorData
    mor_underlying: tuple


def drinfeld_center(T: MonoidalData, cap: int | None = None) -> CenterCategory:
    """Objects: all (carrier, half-braiding) pairs; morphisms: base
    morphisms commuting with the half-braidings; monoidal and braided
    structure induced from the base."""
    cap = default_cap() if cap is None else cap
    cat = T.category
    ob, tm = T.tensor.obj_map, T.tensor.mor_map

    objs = []
    seen = set()
    for t in cat.objects:
        for hb in enumerate_half_braidings(T, t, cap):
            key = hb.key()
            if key not in seen:
                seen.add(key)
                objs.append(hb)
    objs = tuple(objs)
    index = {hb.key(): i for i, hb in enumerate(objs)}

    mor_src, mor_dst, underlying = [], [], []
    by_pair = {}
    for i, zi in enumerate(objs):
        for j, zj in enumerate(objs):
            for f in cat.hom(zi.carrier, zj.carrier):
                if check_center_morphism(T, f, zi, zj):
                    by_pair[(i, j, f)] = len(underlying)
                    mor_src.append(i)
                    mor_dst.append(j)
                    underlying.append(f)

    identity = []
    for i, z in enumerate(objs):
        e = by_pair.get((i, i, cat.identity[z.carrier]))
        if e is None:
            raise InternalInconsistency("identity fails its own center square")
        identity.append(e)

    composition = {}
    for fz in range(len(underlying)):
        for gz in range(len(underlying)):
            if mor_dst[fz] != mor_src[gz]:
                continue
            under = cat.composition[(underlying[gz], underlying[fz])]
            composition[(gz, fz)] = by_pair[(mor_src[fz], mor_dst[gz], under)]

    zcat = FinCategory(len(objs), tuple(mor_src), tuple(mor_dst),
                       tuple(identity), composition)

    obj_map = {}
    for i, zi in enumerate(objs):
        for j, zj in enumerate(objs):
            composite = composite_half_braiding(T, zi, zj)
            k = index.get(composite.key())
            if k is None:
                raise InternalInconsistency(
                    "composite half-braiding missing from the enumeration")
            obj_map[(i, j)] = k
    mor_map = {}
    for fz in range(len(underlying)):
        for gz in range(len(underlying)):
            under = tm[(underlying[fz], underlying[gz])]
            mor_map[(fz, gz)] = by_pair[
                (obj_map[(mor_src[fz], mor_src[gz])],
                 obj_map[(mor_dst[fz], mor_dst[gz])], under)]
    tensor = BifunctorData(zcat, zcat, zcat, obj_map, mor_map)

    unit = index.get(unit_half_braiding(T).key())
    if unit is None:
        raise InternalInconsistency("unit half-braiding missing from the enumeration")

    def lift(i, j, under):
        f = by_pair.get((i, j, under))
        if f is None:
            raise InternalInconsistency(
                "structure morphism of the base fails a center square")
        return f

    a = {}
    for i in zcat.objects:
        for j in zcat.objects:
            ij = obj_map[(i, j)]
            for k in zcat.objects:
                a[(i, j, k)] = lift(
                    obj_map[(ij, k)], obj_map[(i, obj_map[(j, k)])],
                    T.a[(objs[i].carrier, objs[j].carrier, objs[k].carrier)])
    l = {i: lift(obj_map[(unit, i)], i, T.l[objs[i].carrier])
         for i in zcat.objects}
    r = {i: lift(obj_map[(i, unit)], i, T.r[objs[i].carrier])
         for i in zcat.objects}
    zmon = MonoidalData(zcat, tensor, unit, a, l, r, True)

    braiding = {}
    for i in zcat.objects:
        for j in zcat.objects:
            braiding[(i, j)] = lift(obj_map[(i, j)], obj_map[(j, i)],
                                    objs[i].components[objs[j].carrier])
    zbr = BraidedData(zmon, braiding)

    forgetful = FunctorData(zcat, cat,
                            tuple(z.carrier for z in objs), tuple(underlying))
    return CenterCategory(T, objs, zcat, zmon, zbr, forgetful,
                          tuple(underlying))


# ---------------------------------------------------------------------------
# pairs

@dataclass(frozen=True, eq=False)
class PairData:
    base: BraidedData
    target: MonoidalData
    functor: FunctorData
    lift: dict
    phi2: dict
    phi0: int

    def __post_init__(self):
        if self.functor.source is not self.base.category \
                or self.functor.target is not self.target.category:
            raise SourceTargetMismatch("pair functor must run base -> target")
        vcat, tcat = self.base.category, self.target.category
        for v in vcat.objects:
            hb = self.lift.get(v)
            if hb is None:
                raise MalformedTable(f"no half-braiding lift for object {v}")
            if hb.carrier != self.functor.obj_map[v]:
                raise MalformedTable(f"lift of {v} sits on the wrong carrier")
            for x in tcat.objects:
                f = hb.components.get(x)
                if f is None:
                    raise MalformedTable(f"lift of {v} misses component {x}")
                invert_iso(tcat, f)
        # phi2/phi0 endpoint and invertibility checks ride on the
        # monoidal functor wrapper
        mf = MonoidalFunctorData(self.functor, self.base.base, self.target,
                                 self.phi2, self.phi0)
        object.__setattr__(self, "_mf", mf)

    @property
    def monoidal_functor(self) -> MonoidalFunctorData:
        return self._mf


def validate_pair(P: PairData) -> DiagramReport:
    """Every pair invariant: the functor laws, half-braiding naturality
    and hexagons, center squares for F(f), phi2 and phi0, the monoidal
    functor axioms, and braidedness of the lift."""
    T = P.target
    tcat = T.category
    vcat = P.base.category
    fo, fm = P.functor.obj_map, P.functor.mor_map
    entries = list(validate_functor(P.functor).entries)

    bad = None
    for v in vcat.objects:
        bad = _wrap(lambda v=v: _half_braiding_natural(T, P.lift[v]))
        if bad is not None:
            bad = (v,) + bad
            break
    entries.append(entry_for("nat.half-br.", bad))

    bad = None
    for v in vcat.objects:
        bad = _wrap(lambda v=v: _half_braiding_hexagon(T, P.lift[v]))
        if bad is not None:
            bad = (v,) + bad
            break
    entries.append(entry_for(HALF_BR_HEX, bad))

    # F(f) is a center morphism from the lift of src(f) to the lift of dst(f)
    bad = None
    for f in vcat.morphisms:
        src_hb = P.lift[vcat.mor_src[f]]
        dst_hb = P.lift[vcat.mor_dst[f]]
        for x in tcat.objects:
            if not center_square_at(T, fm[f], src_hb, dst_hb, x):
                bad = (f, x)
                break
        if bad:
            break
    entries.append(entry_for("center-sq.F", bad))

    # phi2 is a center morphism from the composite lift to the lift of vw
    vob = P.base.base.tensor.obj_map
    bad = None
    for v in vcat.objects:
        for w in vcat.objects:
            composite = composite_half_braiding(T, P.lift[v], P.lift[w])
            target_hb = P.lift[vob[(v, w)]]
            for x in tcat.objects:
                if not center_square_at(T, P.phi2[(v, w)], composite,
                                        target_hb, x):
                    bad = (v, w, x)
                    break
            if bad:
                break
        if bad:
            break
    entries.append(entry_for(HALF_BR_TENSOR, bad))

    # phi0 is a center morphism from the canonical unit half-braiding
    unit_hb = unit_half_braiding(T)
    bad = None
    for x in tcat.objects:
        if not center_square_at(T, P.phi0, unit_hb,
                                P.lift[P.base.base.unit], x):
            bad = (x,)
            break
    entries.append(entry_for(HALF_BR_UNIT, bad))

    entries.extend(check_monoidal_functor(P.monoidal_functor).entries)

    # the lift is braided: F(beta) . phi2 == phi2 . beta_{F(v)}(F(w))
    comp = tcat.composition
    bad = None
    for v in vcat.objects:
        for w in vcat.objects:
            lhs = comp[(fm[P.base.braiding[(v, w)]], P.phi2[(v, w)])]
            rhs = comp[(P.phi2[(w, v)], P.lift[v].components[fo[w]])]
            if lhs != rhs:
                bad = (v, w)
                break
        if bad:
            break
    entries.append(entry_for(BETA_PHI2, bad))

    return DiagramReport(tuple(entries))


@dataclass(frozen=True, eq=False)
class PairMorphismData:
    source: PairData
    target: PairData
    monoidal: MonoidalFunctorData
    gamma: NatTransfData

    def __post_init__(self):
        if self.monoidal.source is not self.source.target \
                or self.monoidal.target is not self.target.target:
            raise SourceTargetMismatch(
                "monoidal part must run between the pair targets")
        tcat = self.target.target.category
        for v in self.source.base.category.objects:
            invert_iso(tcat, self.gamma.components[v])

    @property
    def gamma_components(self) -> tuple:
        return self.gamma.components


def pair_morphism(P: PairData, Q: PairData, G: MonoidalFunctorData,
                  gamma_components) -> PairMorphismData:
    """Assemble a morphism of pairs; gamma runs F' => G.F."""
    if P.base is not Q.base:
        raise SourceTargetMismatch("pairs live over different bases")
    gf = compose_functors(P.functor, G.functor)
    gamma = NatTransfData(Q.functor, gf, tuple(gamma_components))
    return PairMorphismData(P, Q, G, gamma)


def identity_pair_morphism(P: PairData) -> PairMorphismData:
    from .structures import identity_monoidal_functor
    tcat = P.target.category
    comps = tuple(tcat.identity[P.functor.obj_map[v]]
                  for v in P.base.category.objects)
    return pair_morphism(P, P, identity_monoidal_functor(P.target), comps)


def check_pair_morphism(P: PairData, Q: PairData,
                        M: PairMorphismData) -> DiagramReport:
    """Monoidal functor axioms for G, monoidal naturality of gamma
    against the composed structure on G.F, and the half-braiding
    compatibility hexagon."""
    if M.source is not P or M.target is not Q:
        raise SourceTargetMismatch("morphism does not run between these pairs")
    entries = list(check_monoidal_functor(M.monoidal).entries)

    gf_mon = compose_monoidal_functors(P.monoidal_functor, M.monoidal)
    entries.extend(validate_nat_transf(M.gamma).entries)
    entries.extend(
        check_monoidal_nat(M.gamma, Q.monoidal_functor, gf_mon).entries)

    vcat = P.base.category
    tcat = P.target.category
    tcat2 = Q.target.category
    comp = tcat2.composition
    tm2 = Q.target.tensor.mor_map
    gm, go = M.monoidal.functor.mor_map, M.monoidal.functor.obj_map
    fo = P.functor.obj_map
    gam = M.gamma.components

    def scan():
        for v in vcat.objects:
            gv = gam[v]
            for t in tcat.objects:
                idgt = tcat2.identity[go[t]]
                lhs = comp[(M.monoidal.phi2[(fo[v], t)], tm2[(gv, idgt)])]
                lhs = comp[(gm[P.lift[v].components[t]], lhs)]
                rhs = comp[(tm2[(idgt, gv)],
                            Q.lift[v].components[go[t]])]
                rhs = comp[(M.monoidal.phi2[(t, fo[v])], rhs)]
                if lhs != rhs:
                    return (v, t)
        return None

    entries.append(entry_for(GAMMA_BETA, _wrap(scan)))
    return DiagramReport(tuple(entries))


def check_pair_2morphism(eta: NatTransfData, M: PairMorphismData,
                         Mp: PairMorphismData) -> DiagramReport:
    """Monoidal naturality of eta plus compatibility with both action
    coherences."""
    if M.source is not Mp.source or M.target is not Mp.target:
        raise SourceTargetMismatch("2-morphism needs parallel pair morphisms")
    entries = list(validate_nat_transf(eta).entries)
    entries.extend(check_monoidal_nat(eta, M.monoidal, Mp.monoidal).entries)

    vcat = M.source.base.category
    tcat2 = M.target.target.category
    comp = tcat2.composition
    fo = M.source.functor.obj_map

    def scan():
        for v in vcat.objects:
            if comp[(eta.components[fo[v]], M.gamma.components[v])] != \
                    Mp.gamma.components[v]:
                return (v,)
        return None

    entries.append(entry_for(NAT_TR_GAMMA, _wrap(scan)))
    return DiagramReport(tuple(entries))


def compose_pair_morphisms(M: PairMorphismData,
                           Mp: PairMorphismData) -> PairMorphismData:
    """M followed by Mp; gamma composes as G'(gamma) . gamma'."""
    if M.target is not Mp.source:
        raise SourceTargetMismatch("pair morphisms are not composable")
    G = compose_monoidal_functors(M.monoidal, Mp.monoidal)
    tcat = Mp.target.target.category
    gpm = Mp.monoidal.functor.mor_map
    comps = tuple(
        tcat.composition[(gpm[M.gamma.components[v]], Mp.gamma.components[v])]
        for v in M.source.base.category.objects)
    return pair_morphism(M.source, Mp.target, G, comps)
