"""One checker per named coherence diagram, quantified exhaustively.

Every diagram is evaluated as two explicit composition chains compared
by morphism id.  Loops run in ascending id order with the leftmost
index outermost, so the reported counterexample is the lexicographic
minimum.  Within one diagram the scan stops at the first violation;
across diagrams nothing is skipped, so reports are complete.

Naturality of a component family is checked inside the checker that
owns the family, never at construction time.
"""

from __future__ import annotations

from .errors import MalformedTable, NonUnitalInput, SourceTargetMismatch
from .fincat import FinCategory, invert_iso, same_functor, validate_nat_transf
from .report import (A1_A, A1_A2, A1_LACT, A1_M, A1_R, A2_A, A2_L, A2_LACT,
                     A2_M, A_L, A_R, BETA_ACT, BETA_L, BETA_PHI2, BETA_R,
                     BR_HEX_1, BR_HEX_2, COMP_A1, COMP_A2, HEX_PHI2,
                     NAT_TR_GAMMA, NAT_TR_PHI0, NAT_TR_PHI2, NAT_TR_S,
                     PENT_A, PENT_M, PHI0_L, PHI0_R, S_LACT, S_M,
                     TRI_A, TRI_M, TRI_PRIME_M, DiagramReport, entry_for)
from .structures import (BraidedData, ModMonData, ModMonFunctorData,
                         ModuleData, ModuleFunctorData, MonoidalData,
                         MonoidalFunctorData)
from .fincat import NatTransfData


def _wrap(fn):
    try:
        return fn()
    except KeyError as exc:
        raise MalformedTable(f"diagram leg does not typecheck: {exc}") from None


# ---------------------------------------------------------------------------
# raw-table evaluators, shared with the example generators (the generators
# filter candidates through these very functions, never through a closed
# cocycle formula)

def pentagon_holds_at(cat: FinCategory, ob, tm, a, u, v, w, x) -> bool:
    comp = cat.composition
    ident = cat.identity
    lhs = comp[(a[(u, ob[(v, w)], x)], tm[(a[(u, v, w)], ident[x])])]
    lhs = comp[(tm[(ident[u], a[(v, w, x)])], lhs)]
    rhs = comp[(a[(u, v, ob[(w, x)])], a[(ob[(u, v)], w, x)])]
    return lhs == rhs


def pentagon_violation(cat: FinCategory, ob, tm, a):
    """First (u,v,w,x) violating the associativity pentagon, else None."""
    n = cat.n_objects
    for u in range(n):
        for v in range(n):
            for w in range(n):
                for x in range(n):
                    if not pentagon_holds_at(cat, ob, tm, a, u, v, w, x):
                        return (u, v, w, x)
    return None


def triangle_violation(cat: FinCategory, ob, tm, a, l, r, unit):
    """First (v,w) violating the unit triangle, else None."""
    comp = cat.composition
    ident = cat.identity
    for v in cat.objects:
        idv = ident[v]
        rv = r[v]
        for w in cat.objects:
            if comp[(tm[(idv, l[w])], a[(v, unit, w)])] != tm[(rv, ident[w])]:
                return (v, w)
    return None


def hexagon1_holds_at(cat: FinCategory, ob, tm, a, beta, u, v, w) -> bool:
    comp = cat.composition
    ident = cat.identity
    lhs = comp[(beta[(u, ob[(v, w)])], a[(u, v, w)])]
    lhs = comp[(a[(v, w, u)], lhs)]
    rhs = comp[(a[(v, u, w)], tm[(beta[(u, v)], ident[w])])]
    rhs = comp[(tm[(ident[v], beta[(u, w)])], rhs)]
    return lhs == rhs


def hexagon2_holds_at(cat: FinCategory, ob, tm, a, beta, u, v, w) -> bool:
    comp = cat.composition
    ident = cat.identity
    inva_uvw = invert_iso(cat, a[(u, v, w)])
    lhs = comp[(beta[(ob[(u, v)], w)], inva_uvw)]
    lhs = comp[(invert_iso(cat, a[(w, u, v)]), lhs)]
    rhs = comp[(invert_iso(cat, a[(u, w, v)]), tm[(ident[u], beta[(v, w)])])]
    rhs = comp[(tm[(beta[(u, w)], ident[v])], rhs)]
    return lhs == rhs


def hexagon1_violation(cat: FinCategory, ob, tm, a, beta):
    for u in cat.objects:
        for v in cat.objects:
            for w in cat.objects:
                if not hexagon1_holds_at(cat, ob, tm, a, beta, u, v, w):
                    return (u, v, w)
    return None


def hexagon2_violation(cat: FinCategory, ob, tm, a, beta):
    for u in cat.objects:
        for v in cat.objects:
            for w in cat.objects:
                if not hexagon2_holds_at(cat, ob, tm, a, beta, u, v, w):
                    return (u, v, w)
    return None


# ---------------------------------------------------------------------------
# monoidal

def _naturality_a(M: MonoidalData):
    cat = M.category
    comp, tm, a = cat.composition, M.tensor.mor_map, M.a
    src, dst = cat.mor_src, cat.mor_dst
    for f in cat.morphisms:
        for g in cat.morphisms:
            fg = tm[(f, g)]
            for h in cat.morphisms:
                lhs = comp[(a[(dst[f], dst[g], dst[h])], tm[(fg, h)])]
                rhs = comp[(tm[(f, tm[(g, h)])], a[(src[f], src[g], src[h])])]
                if lhs != rhs:
                    return (f, g, h)
    return None


def _naturality_unitors(M: MonoidalData):
    cat = M.category
    comp, tm = cat.composition, M.tensor.mor_map
    unit_id = cat.identity[M.unit]
    bad_l = bad_r = None
    for f in cat.morphisms:
        v, v2 = cat.mor_src[f], cat.mor_dst[f]
        if comp[(M.l[v2], tm[(unit_id, f)])] != comp[(f, M.l[v])]:
            bad_l = (f,)
            break
    for f in cat.morphisms:
        v, v2 = cat.mor_src[f], cat.mor_dst[f]
        if comp[(M.r[v2], tm[(f, unit_id)])] != comp[(f, M.r[v])]:
            bad_r = (f,)
            break
    return bad_l, bad_r


def check_monoidal(M: MonoidalData, diagrams=None) -> DiagramReport:
    """Naturality of a (and l, r), the pentagon, and the unit triangle."""
    wanted = diagrams if diagrams is not None else (
        {PENT_A, TRI_A} if M.unital else {PENT_A})
    if TRI_A in wanted and not M.unital:
        raise NonUnitalInput("tri.a requires unital monoidal data")
    entries = []
    if PENT_A in wanted:
        entries.append(entry_for(
            "nat.a", _wrap(lambda: _naturality_a(M))))
        entries.append(entry_for(PENT_A, _wrap(
            lambda: pentagon_violation(
                M.category, M.tensor.obj_map, M.tensor.mor_map, M.a))))
    if TRI_A in wanted:
        bad_l, bad_r = _wrap(lambda: _naturality_unitors(M))
        entries.append(entry_for("nat.l", bad_l))
        entries.append(entry_for("nat.r", bad_r))
        entries.append(entry_for(TRI_A, _wrap(
            lambda: triangle_violation(
                M.category, M.tensor.obj_map, M.tensor.mor_map,
                M.a, M.l, M.r, M.unit))))
    return DiagramReport(tuple(entries))


# ---------------------------------------------------------------------------
# braided

def _naturality_beta(B: BraidedData):
    cat = B.category
    comp, tm, beta = cat.composition, B.base.tensor.mor_map, B.braiding
    for f in cat.morphisms:
        for g in cat.morphisms:
            lhs = comp[(beta[(cat.mor_dst[f], cat.mor_dst[g])], tm[(f, g)])]
            rhs = comp[(tm[(g, f)], beta[(cat.mor_src[f], cat.mor_src[g])])]
            if lhs != rhs:
                return (f, g)
    return None


def check_braided(B: BraidedData) -> DiagramReport:
    """Naturality of the braiding plus both braiding hexagons."""
    M = B.base
    args = (M.category, M.tensor.obj_map, M.tensor.mor_map, M.a, B.braiding)
    return DiagramReport((
        entry_for("nat.β", _wrap(lambda: _naturality_beta(B))),
        entry_for(BR_HEX_1, _wrap(lambda: hexagon1_violation(*args))),
        entry_for(BR_HEX_2, _wrap(lambda: hexagon2_violation(*args))),
    ))


# ---------------------------------------------------------------------------
# module

def _naturality_m(D: ModuleData):
    vcat, mcat = D.base.category, D.carrier
    comp = mcat.composition
    am = D.action.mor_map
    tv = D.base.base.tensor.mor_map
    m = D.m
    for f in vcat.morphisms:
        for g in vcat.morphisms:
            fg = tv[(f, g)]
            for h in mcat.morphisms:
                lhs = comp[(m[(vcat.mor_dst[f], vcat.mor_dst[g], mcat.mor_dst[h])],
                            am[(fg, h)])]
                rhs = comp[(am[(f, am[(g, h)])],
                            m[(vcat.mor_src[f], vcat.mor_src[g], mcat.mor_src[h])])]
                if lhs != rhs:
                    return (f, g, h)
    return None


def _naturality_l_act(D: ModuleData):
    mcat = D.carrier
    comp, am = mcat.composition, D.action.mor_map
    unit_id = D.base.category.identity[D.base.base.unit]
    for h in mcat.morphisms:
        if comp[(D.l_act[mcat.mor_dst[h]], am[(unit_id, h)])] != \
                comp[(h, D.l_act[mcat.mor_src[h]])]:
            return (h,)
    return None


def _pent_m(D: ModuleData):
    vcat, mcat = D.base.category, D.carrier
    comp = mcat.composition
    am, aob = D.action.mor_map, D.action.obj_map
    vob = D.base.base.tensor.obj_map
    av = D.base.base.a
    m = D.m
    for u in vcat.objects:
        idu = vcat.identity[u]
        for v in vcat.objects:
            uv = vob[(u, v)]
            for w in vcat.objects:
                vw = vob[(v, w)]
                a_uvw = av[(u, v, w)]
                for x in mcat.objects:
                    lhs = comp[(m[(u, vw, x)], am[(a_uvw, mcat.identity[x])])]
                    lhs = comp[(am[(idu, m[(v, w, x)])], lhs)]
                    rhs = comp[(m[(u, v, aob[(w, x)])], m[(uv, w, x)])]
                    if lhs != rhs:
                        return (u, v, w, x)
    return None


def _tri_m(D: ModuleData):
    vcat, mcat = D.base.category, D.carrier
    comp, am = mcat.composition, D.action.mor_map
    e = D.base.base.unit
    rv = D.base.base.r
    for v in vcat.objects:
        idv = vcat.identity[v]
        for x in mcat.objects:
            lhs = comp[(am[(idv, D.l_act[x])], D.m[(v, e, x)])]
            if lhs != am[(rv[v], mcat.identity[x])]:
                return (v, x)
    return None


def check_module(D: ModuleData) -> DiagramReport:
    """Naturality of m and the module unitor, module pentagon and triangle."""
    return DiagramReport((
        entry_for("nat.m", _wrap(lambda: _naturality_m(D))),
        entry_for("nat.lʳ", _wrap(lambda: _naturality_l_act(D))),
        entry_for(PENT_M, _wrap(lambda: _pent_m(D))),
        entry_for(TRI_M, _wrap(lambda: _tri_m(D))),
    ))


# ---------------------------------------------------------------------------
# module monoidal

def _naturality_alpha1(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    al1 = D.alpha1
    for f in vcat.morphisms:
        for g in mcat.morphisms:
            fg = am[(f, g)]
            for h in mcat.morphisms:
                lhs = comp[(al1[(vcat.mor_dst[f], mcat.mor_dst[g], mcat.mor_dst[h])],
                            tm[(fg, h)])]
                rhs = comp[(am[(f, tm[(g, h)])],
                            al1[(vcat.mor_src[f], mcat.mor_src[g], mcat.mor_src[h])])]
                if lhs != rhs:
                    return (f, g, h)
    return None


def _naturality_alpha2(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    al2 = D.alpha2
    for f in vcat.morphisms:
        for g in mcat.morphisms:
            for h in mcat.morphisms:
                lhs = comp[(al2[(vcat.mor_dst[f], mcat.mor_dst[g], mcat.mor_dst[h])],
                            tm[(g, am[(f, h)])])]
                rhs = comp[(am[(f, tm[(g, h)])],
                            al2[(vcat.mor_src[f], mcat.mor_src[g], mcat.mor_src[h])])]
                if lhs != rhs:
                    return (f, g, h)
    return None


def _a1_a(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    ob, aob = D.monoidal.tensor.obj_map, D.module.action.obj_map
    aM, al1 = D.monoidal.a, D.alpha1
    for v in vcat.objects:
        idv = vcat.identity[v]
        for l in mcat.objects:
            for m in mcat.objects:
                lm = ob[(l, m)]
                a1_vlm = al1[(v, l, m)]
                for n in mcat.objects:
                    lhs = comp[(al1[(v, lm, n)], tm[(a1_vlm, mcat.identity[n])])]
                    lhs = comp[(am[(idv, aM[(l, m, n)])], lhs)]
                    rhs = comp[(al1[(v, l, ob[(m, n)])], aM[(aob[(v, l)], m, n)])]
                    if lhs != rhs:
                        return (v, l, m, n)
    return None


def _a1_m(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    ob, aob = D.monoidal.tensor.obj_map, D.module.action.obj_map
    vob = D.base.base.tensor.obj_map
    mfam, al1 = D.module.m, D.alpha1
    for v in vcat.objects:
        idv = vcat.identity[v]
        for w in vcat.objects:
            vw = vob[(v, w)]
            for m in mcat.objects:
                m_vwm = mfam[(v, w, m)]
                wm = aob[(w, m)]
                for n in mcat.objects:
                    lhs = comp[(al1[(v, wm, n)], tm[(m_vwm, mcat.identity[n])])]
                    lhs = comp[(am[(idv, al1[(w, m, n)])], lhs)]
                    rhs = comp[(mfam[(v, w, ob[(m, n)])], al1[(vw, m, n)])]
                    if lhs != rhs:
                        return (v, w, m, n)
    return None


def _a2_a(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    ob, aob = D.monoidal.tensor.obj_map, D.module.action.obj_map
    aM, al2 = D.monoidal.a, D.alpha2
    for v in vcat.objects:
        idv = vcat.identity[v]
        for l in mcat.objects:
            idl = mcat.identity[l]
            for m in mcat.objects:
                lm = ob[(l, m)]
                for n in mcat.objects:
                    lhs = comp[(tm[(idl, al2[(v, m, n)])], aM[(l, m, aob[(v, n)])])]
                    lhs = comp[(al2[(v, l, ob[(m, n)])], lhs)]
                    rhs = comp[(am[(idv, aM[(l, m, n)])], al2[(v, lm, n)])]
                    if lhs != rhs:
                        return (v, l, m, n)
    return None


def _a2_m(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    ob, aob = D.monoidal.tensor.obj_map, D.module.action.obj_map
    vob = D.base.base.tensor.obj_map
    mfam, al2 = D.module.m, D.alpha2
    for v in vcat.objects:
        idv = vcat.identity[v]
        for w in vcat.objects:
            vw = vob[(v, w)]
            for m in mcat.objects:
                idm = mcat.identity[m]
                for n in mcat.objects:
                    lhs = comp[(al2[(v, m, aob[(w, n)])], tm[(idm, mfam[(v, w, n)])])]
                    lhs = comp[(am[(idv, al2[(w, m, n)])], lhs)]
                    rhs = comp[(mfam[(v, w, ob[(m, n)])], al2[(vw, m, n)])]
                    if lhs != rhs:
                        return (v, w, m, n)
    return None


def _a1_a2(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    ob, aob = D.monoidal.tensor.obj_map, D.module.action.obj_map
    aM, al1, al2 = D.monoidal.a, D.alpha1, D.alpha2
    for v in vcat.objects:
        idv = vcat.identity[v]
        for l in mcat.objects:
            idl = mcat.identity[l]
            for m in mcat.objects:
                lm = ob[(l, m)]
                a2_vlm = al2[(v, l, m)]
                for n in mcat.objects:
                    lhs = comp[(al1[(v, lm, n)], tm[(a2_vlm, mcat.identity[n])])]
                    lhs = comp[(am[(idv, aM[(l, m, n)])], lhs)]
                    rhs = comp[(tm[(idl, al1[(v, m, n)])], aM[(l, aob[(v, m)], n)])]
                    rhs = comp[(al2[(v, l, ob[(m, n)])], rhs)]
                    if lhs != rhs:
                        return (v, l, m, n)
    return None


def _beta_act(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    ob, aob = D.monoidal.tensor.obj_map, D.module.action.obj_map
    vob = D.base.base.tensor.obj_map
    beta = D.base.braiding
    mfam, al1, al2 = D.module.m, D.alpha1, D.alpha2
    inv = lambda f: invert_iso(mcat, f)
    for v in vcat.objects:
        idv = vcat.identity[v]
        for w in vcat.objects:
            idw = vcat.identity[w]
            b_vw = beta[(v, w)]
            for m in mcat.objects:
                wm = aob[(w, m)]
                for n in mcat.objects:
                    mn = ob[(m, n)]
                    lhs = comp[(am[(idv, al1[(w, m, n)])], al2[(v, wm, n)])]
                    lhs = comp[(inv(mfam[(v, w, mn)]), lhs)]
                    lhs = comp[(am[(b_vw, mcat.identity[mn])], lhs)]
                    rhs = comp[(am[(idw, al2[(v, m, n)])], al1[(w, m, aob[(v, n)])])]
                    rhs = comp[(inv(mfam[(w, v, mn)]), rhs)]
                    if lhs != rhs:
                        return (v, w, m, n)
    return None


def check_modmon(D: ModMonData) -> DiagramReport:
    """Naturality of both mixed associators plus the six axiom diagrams."""
    return DiagramReport((
        entry_for("nat.α¹", _wrap(lambda: _naturality_alpha1(D))),
        entry_for("nat.α²", _wrap(lambda: _naturality_alpha2(D))),
        entry_for(A1_A, _wrap(lambda: _a1_a(D))),
        entry_for(A1_M, _wrap(lambda: _a1_m(D))),
        entry_for(A2_A, _wrap(lambda: _a2_a(D))),
        entry_for(A2_M, _wrap(lambda: _a2_m(D))),
        entry_for(A1_A2, _wrap(lambda: _a1_a2(D))),
        entry_for(BETA_ACT, _wrap(lambda: _beta_act(D))),
    ))


# ---------------------------------------------------------------------------
# structured functors

def _naturality_phi2(F: MonoidalFunctorData):
    src, tgt = F.source.category, F.target.category
    comp = tgt.composition
    tm_t = F.target.tensor.mor_map
    tm_s = F.source.tensor.mor_map
    fm = F.functor.mor_map
    phi2 = F.phi2
    for f in src.morphisms:
        for g in src.morphisms:
            lhs = comp[(phi2[(src.mor_dst[f], src.mor_dst[g])],
                        tm_t[(fm[f], fm[g])])]
            rhs = comp[(fm[tm_s[(f, g)]],
                        phi2[(src.mor_src[f], src.mor_src[g])])]
            if lhs != rhs:
                return (f, g)
    return None


def _hex_phi2(F: MonoidalFunctorData):
    src, tgt = F.source, F.target
    scat, tcat = src.category, tgt.category
    comp = tcat.composition
    fo, fm = F.functor.obj_map, F.functor.mor_map
    tm = tgt.tensor.mor_map
    ob = src.tensor.obj_map
    phi2 = F.phi2
    for u in scat.objects:
        idFu = tcat.identity[fo[u]]
        for v in scat.objects:
            uv = ob[(u, v)]
            p_uv = phi2[(u, v)]
            for w in scat.objects:
                lhs = comp[(phi2[(uv, w)], tm[(p_uv, tcat.identity[fo[w]])])]
                lhs = comp[(fm[src.a[(u, v, w)]], lhs)]
                rhs = comp[(tm[(idFu, phi2[(v, w)])],
                            tgt.a[(fo[u], fo[v], fo[w])])]
                rhs = comp[(phi2[(u, ob[(v, w)])], rhs)]
                if lhs != rhs:
                    return (u, v, w)
    return None


def _phi0_squares(F: MonoidalFunctorData):
    src, tgt = F.source, F.target
    scat, tcat = src.category, tgt.category
    comp = tcat.composition
    fo, fm = F.functor.obj_map, F.functor.mor_map
    tm = tgt.tensor.mor_map
    phi2, phi0 = F.phi2, F.phi0
    e = src.unit
    bad_l = bad_r = None
    for v in scat.objects:
        idFv = tcat.identity[fo[v]]
        lhs = comp[(phi2[(e, v)], tm[(phi0, idFv)])]
        lhs = comp[(fm[src.l[v]], lhs)]
        if lhs != tgt.l[fo[v]]:
            bad_l = (v,)
            break
    for v in scat.objects:
        idFv = tcat.identity[fo[v]]
        lhs = comp[(phi2[(v, e)], tm[(idFv, phi0)])]
        lhs = comp[(fm[src.r[v]], lhs)]
        if lhs != tgt.r[fo[v]]:
            bad_r = (v,)
            break
    return bad_l, bad_r


def check_monoidal_functor(F: MonoidalFunctorData, diagrams=None) -> DiagramReport:
    """Naturality of phi2, the monoidal-functor hexagon and unit squares."""
    both_unital = F.source.unital and F.target.unital
    wanted = diagrams if diagrams is not None else (
        {HEX_PHI2, PHI0_L, PHI0_R} if both_unital else {HEX_PHI2})
    if (PHI0_L in wanted or PHI0_R in wanted) and not F.unital:
        raise NonUnitalInput("φ₀ squares require unital data")
    entries = [
        entry_for("nat.φ₂", _wrap(lambda: _naturality_phi2(F))),
        entry_for(HEX_PHI2, _wrap(lambda: _hex_phi2(F))),
    ]
    if PHI0_L in wanted or PHI0_R in wanted:
        bad_l, bad_r = _wrap(lambda: _phi0_squares(F))
        if PHI0_L in wanted:
            entries.append(entry_for(PHI0_L, bad_l))
        if PHI0_R in wanted:
            entries.append(entry_for(PHI0_R, bad_r))
    return DiagramReport(tuple(entries))


def check_braided_functor(F: MonoidalFunctorData, src: BraidedData,
                          dst: BraidedData) -> DiagramReport:
    """Compatibility of phi2 with the two braidings."""
    if src.base is not F.source or dst.base is not F.target:
        raise SourceTargetMismatch("braided data does not match the functor")
    scat, tcat = src.category, dst.category
    comp = tcat.composition
    fo, fm = F.functor.obj_map, F.functor.mor_map
    phi2 = F.phi2

    def scan():
        for v in scat.objects:
            for w in scat.objects:
                lhs = comp[(fm[src.braiding[(v, w)]], phi2[(v, w)])]
                rhs = comp[(phi2[(w, v)], dst.braiding[(fo[v], fo[w])])]
                if lhs != rhs:
                    return (v, w)
        return None

    return DiagramReport((entry_for(BETA_PHI2, _wrap(scan)),))


def _naturality_s(F: ModuleFunctorData):
    vcat = F.source.base.category
    scat, tcat = F.source.carrier, F.target.carrier
    comp = tcat.composition
    am_t = F.target.action.mor_map
    am_s = F.source.action.mor_map
    fm = F.functor.mor_map
    s = F.s
    for f in vcat.morphisms:
        for g in scat.morphisms:
            lhs = comp[(s[(vcat.mor_dst[f], scat.mor_dst[g])], am_t[(f, fm[g])])]
            rhs = comp[(fm[am_s[(f, g)]], s[(vcat.mor_src[f], scat.mor_src[g])])]
            if lhs != rhs:
                return (f, g)
    return None


def _s_m(F: ModuleFunctorData):
    vcat = F.source.base.category
    scat, tcat = F.source.carrier, F.target.carrier
    comp = tcat.composition
    fo, fm = F.functor.obj_map, F.functor.mor_map
    am = F.target.action.mor_map
    aob_s = F.source.action.obj_map
    vob = F.source.base.base.tensor.obj_map
    m_t, m_s, s = F.target.m, F.source.m, F.s
    for v in vcat.objects:
        idv = vcat.identity[v]
        for w in vcat.objects:
            vw = vob[(v, w)]
            for x in scat.objects:
                lhs = comp[(am[(idv, s[(w, x)])], m_t[(v, w, fo[x])])]
                lhs = comp[(s[(v, aob_s[(w, x)])], lhs)]
                rhs = comp[(fm[m_s[(v, w, x)]], s[(vw, x)])]
                if lhs != rhs:
                    return (v, w, x)
    return None


def _s_l_act(F: ModuleFunctorData):
    vcat = F.source.base.category
    scat, tcat = F.source.carrier, F.target.carrier
    comp = tcat.composition
    fo, fm = F.functor.obj_map, F.functor.mor_map
    e = F.source.base.base.unit
    for x in scat.objects:
        lhs = comp[(fm[F.source.l_act[x]], F.s[(e, x)])]
        if lhs != F.target.l_act[fo[x]]:
            return (x,)
    return None


def check_module_functor(F: ModuleFunctorData) -> DiagramReport:
    """Naturality of s plus its pentagon and triangle."""
    return DiagramReport((
        entry_for("nat.s", _wrap(lambda: _naturality_s(F))),
        entry_for(S_M, _wrap(lambda: _s_m(F))),
        entry_for(S_LACT, _wrap(lambda: _s_l_act(F))),
    ))


def check_modmon_functor(F: ModMonFunctorData, src: ModMonData,
                         dst: ModMonData) -> DiagramReport:
    """Compatibility with both mixed associators."""
    if F.monoidal_part.source is not src.monoidal \
            or F.monoidal_part.target is not dst.monoidal \
            or F.module_part.source is not src.module \
            or F.module_part.target is not dst.module:
        raise SourceTargetMismatch("module monoidal data does not match the functor")
    vcat = src.base.category
    scat, tcat = src.carrier, dst.carrier
    comp = tcat.composition
    fo, fm = F.functor.obj_map, F.functor.mor_map
    tm = dst.monoidal.tensor.mor_map
    am = dst.module.action.mor_map
    ob_s = src.monoidal.tensor.obj_map
    aob_s = src.module.action.obj_map
    phi2, s = F.phi2, F.s

    def comp_a1():
        for v in vcat.objects:
            idv = vcat.identity[v]
            for m in scat.objects:
                s_vm = s[(v, m)]
                for n in scat.objects:
                    lhs = comp[(am[(idv, phi2[(m, n)])],
                                dst.alpha1[(v, fo[m], fo[n])])]
                    lhs = comp[(s[(v, ob_s[(m, n)])], lhs)]
                    rhs = comp[(phi2[(aob_s[(v, m)], n)],
                                tm[(s_vm, tcat.identity[fo[n]])])]
                    rhs = comp[(fm[src.alpha1[(v, m, n)]], rhs)]
                    if lhs != rhs:
                        return (v, m, n)
        return None

    def comp_a2():
        for v in vcat.objects:
            idv = vcat.identity[v]
            for m in scat.objects:
                idFm = tcat.identity[fo[m]]
                for n in scat.objects:
                    lhs = comp[(am[(idv, phi2[(m, n)])],
                                dst.alpha2[(v, fo[m], fo[n])])]
                    lhs = comp[(s[(v, ob_s[(m, n)])], lhs)]
                    rhs = comp[(phi2[(m, aob_s[(v, n)])], tm[(idFm, s[(v, n)])])]
                    rhs = comp[(fm[src.alpha2[(v, m, n)]], rhs)]
                    if lhs != rhs:
                        return (v, m, n)
        return None

    return DiagramReport((
        entry_for(COMP_A1, _wrap(comp_a1)),
        entry_for(COMP_A2, _wrap(comp_a2)),
    ))


# ---------------------------------------------------------------------------
# structured natural transformations

def check_monoidal_nat(eta: NatTransfData, F: MonoidalFunctorData,
                       G: MonoidalFunctorData, diagrams=None) -> DiagramReport:
    """Compatibility of a natural transformation with phi2 (and phi0)."""
    if F.source is not G.source or F.target is not G.target:
        raise SourceTargetMismatch("monoidal functors must be parallel")
    if not (same_functor(eta.source_functor, F.functor)
            and same_functor(eta.target_functor, G.functor)):
        raise SourceTargetMismatch("transformation does not run F => G")
    both_unital = F.unital and G.unital
    wanted = diagrams if diagrams is not None else (
        {NAT_TR_PHI2, NAT_TR_PHI0} if both_unital else {NAT_TR_PHI2})
    if NAT_TR_PHI0 in wanted and not both_unital:
        raise NonUnitalInput("nat.tr.&φ₀ requires unital data")

    scat, tcat = F.source.category, F.target.category
    comp = tcat.composition
    tm = F.target.tensor.mor_map
    ob = F.source.tensor.obj_map
    c = eta.components

    entries = []
    if NAT_TR_PHI2 in wanted:
        def scan():
            for v in scat.objects:
                for w in scat.objects:
                    lhs = comp[(c[ob[(v, w)]], F.phi2[(v, w)])]
                    rhs = comp[(G.phi2[(v, w)], tm[(c[v], c[w])])]
                    if lhs != rhs:
                        return (v, w)
            return None
        entries.append(entry_for(NAT_TR_PHI2, _wrap(scan)))
    if NAT_TR_PHI0 in wanted:
        bad = None
        if comp[(c[F.source.unit], F.phi0)] != G.phi0:
            bad = (F.source.unit,)
        entries.append(entry_for(NAT_TR_PHI0, bad))
    return DiagramReport(tuple(entries))


def check_module_nat(eta: NatTransfData, F: ModuleFunctorData,
                     G: ModuleFunctorData) -> DiagramReport:
    """Compatibility of a natural transformation with the module structure."""
    if F.source is not G.source or F.target is not G.target:
        raise SourceTargetMismatch("module functors must be parallel")
    if not (same_functor(eta.source_functor, F.functor)
            and same_functor(eta.target_functor, G.functor)):
        raise SourceTargetMismatch("transformation does not run F => G")
    vcat = F.source.base.category
    scat, tcat = F.source.carrier, F.target.carrier
    comp = tcat.composition
    am = F.target.action.mor_map
    aob = F.source.action.obj_map
    c = eta.components

    def scan():
        for v in vcat.objects:
            idv = vcat.identity[v]
            for x in scat.objects:
                lhs = comp[(c[aob[(v, x)]], F.s[(v, x)])]
                rhs = comp[(G.s[(v, x)], am[(idv, c[x])])]
                if lhs != rhs:
                    return (v, x)
        return None

    return DiagramReport((entry_for(NAT_TR_S, _wrap(scan)),))


# ---------------------------------------------------------------------------
# derived laws

def _derived_monoidal(M: MonoidalData):
    cat = M.category
    comp, tm, ob = cat.composition, M.tensor.mor_map, M.tensor.obj_map
    e = M.unit
    bad_al = bad_ar = None
    for v in cat.objects:
        for w in cat.objects:
            if comp[(M.l[ob[(v, w)]], M.a[(e, v, w)])] != \
                    tm[(M.l[v], cat.identity[w])]:
                bad_al = (v, w)
                break
        if bad_al:
            break
    for v in cat.objects:
        for w in cat.objects:
            if comp[(tm[(cat.identity[v], M.r[w])], M.a[(v, w, e)])] != \
                    M.r[ob[(v, w)]]:
                bad_ar = (v, w)
                break
        if bad_ar:
            break
    return [entry_for(A_L, bad_al), entry_for(A_R, bad_ar)]


def _derived_braided(B: BraidedData):
    M = B.base
    cat = M.category
    comp = cat.composition
    e = M.unit
    bad_r = bad_l = None
    for v in cat.objects:
        if comp[(M.l[v], B.braiding[(v, e)])] != M.r[v]:
            bad_r = (v,)
            break
    for v in cat.objects:
        if comp[(M.r[v], B.braiding[(e, v)])] != M.l[v]:
            bad_l = (v,)
            break
    return [entry_for(BETA_R, bad_r), entry_for(BETA_L, bad_l)]


def _derived_module(D: ModuleData):
    vcat, mcat = D.base.category, D.carrier
    comp, am = mcat.composition, D.action.mor_map
    aob = D.action.obj_map
    e = D.base.base.unit
    lv = D.base.base.l
    bad = None
    for v in vcat.objects:
        for x in mcat.objects:
            lhs = comp[(D.l_act[aob[(v, x)]], D.m[(e, v, x)])]
            if lhs != am[(lv[v], mcat.identity[x])]:
                bad = (v, x)
                break
        if bad:
            break
    return [entry_for(TRI_PRIME_M, bad)]


def _derived_modmon(D: ModMonData):
    vcat, mcat = D.base.category, D.carrier
    comp, tm, am = mcat.composition, D.monoidal.tensor.mor_map, D.module.action.mor_map
    ob, aob = D.monoidal.tensor.obj_map, D.module.action.obj_map
    eV = D.base.base.unit
    entries = []

    bad = None
    for x in mcat.objects:
        for y in mcat.objects:
            lhs = comp[(D.module.l_act[ob[(x, y)]], D.alpha1[(eV, x, y)])]
            if lhs != tm[(D.module.l_act[x], mcat.identity[y])]:
                bad = (x, y)
                break
        if bad:
            break
    entries.append(entry_for(A1_LACT, bad))

    bad = None
    for x in mcat.objects:
        for y in mcat.objects:
            lhs = comp[(D.module.l_act[ob[(x, y)]], D.alpha2[(eV, x, y)])]
            if lhs != tm[(mcat.identity[x], D.module.l_act[y])]:
                bad = (x, y)
                break
        if bad:
            break
    entries.append(entry_for(A2_LACT, bad))

    if D.unital:
        eM = D.monoidal.unit
        bad = None
        for v in vcat.objects:
            for x in mcat.objects:
                lhs = comp[(am[(vcat.identity[v], D.monoidal.r[x])],
                            D.alpha1[(v, x, eM)])]
                if lhs != D.monoidal.r[aob[(v, x)]]:
                    bad = (v, x)
                    break
            if bad:
                break
        entries.append(entry_for(A1_R, bad))

        bad = None
        for v in vcat.objects:
            for x in mcat.objects:
                lhs = comp[(am[(vcat.identity[v], D.monoidal.l[x])],
                            D.alpha2[(v, eM, x)])]
                if lhs != D.monoidal.l[aob[(v, x)]]:
                    bad = (v, x)
                    break
            if bad:
                break
        entries.append(entry_for(A2_L, bad))
    return entries


def derived_laws_suite(bundle) -> DiagramReport:
    """Diagrams that hold for free once the axioms do, checked exhaustively.

    Dispatches on the structure kind; each level reports only its own
    derived diagrams (run the suite per section to cover everything).
    """
    if isinstance(bundle, ModMonData):
        entries = _wrap(lambda: _derived_modmon(bundle))
    elif isinstance(bundle, ModuleData):
        entries = _wrap(lambda: _derived_module(bundle))
    elif isinstance(bundle, BraidedData):
        entries = _wrap(lambda: _derived_braided(bundle))
    elif isinstance(bundle, MonoidalData):
        if not bundle.unital:
            return DiagramReport(())
        entries = _wrap(lambda: _derived_monoidal(bundle))
    else:
        raise TypeError(f"no derived laws for {type(bundle).__name__}")
    return DiagramReport(tuple(entries))
