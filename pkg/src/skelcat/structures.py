"""Structure bundles layered on finite categories.

Monoidal, braided, module and module-monoidal data are explicit
component tables over a validated substrate.  Construction re-validates
the substrate category, checks that every component family is total
with the stated endpoints, and that every component is invertible.
Naturality and the coherence diagrams are deliberately NOT checked
here: the coherence module owns them, so that deliberately broken
bundles can be constructed for fuzzing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, MalformedTable, NonUnitalInput
from .fincat import (FinCategory, FunctorData, ensure_valid, identity_functor,
                     invert_iso)
from .report import DiagramReport, entry_for

__all__ = [
    "BifunctorData", "MonoidalData", "BraidedData", "ModuleData",
    "ModMonData", "MonoidalFunctorData", "ModuleFunctorData",
    "ModMonFunctorData", "DiagramReport", "validate_bifunctor", "component",
    "identity_monoidal_functor", "identity_modmon_functor",
    "compose_monoidal_functors", "compose_module_functors",
]


def component(family: dict, *indices):
    """Look up one component of a family table."""
    key = indices[0] if len(indices) == 1 else indices
    try:
        return family[key]
    except KeyError:
        raise IndexOutOfRange(f"no component at index {key}") from None


def _require(cond: bool, msg: str):
    if not cond:
        raise MalformedTable(msg)


def _check_family(cat: FinCategory, family: dict, keys, endpoints, name: str):
    """Family is total over `keys`, each component an iso with the
    endpoints computed by `endpoints(key) -> (src, dst)`."""
    seen = 0
    for key in keys:
        seen += 1
        try:
            f = family[key]
        except KeyError:
            raise MalformedTable(f"{name} missing component at {key}") from None
        _require(0 <= f < len(cat.mor_src), f"{name}[{key}] out of range")
        s, d = endpoints(key)
        _require(cat.mor_src[f] == s and cat.mor_dst[f] == d,
                 f"{name}[{key}] has endpoints ({cat.mor_src[f]},{cat.mor_dst[f]}), "
                 f"expected ({s},{d})")
        invert_iso(cat, f)
    _require(len(family) == seen, f"{name} has extra components")


@dataclass(frozen=True, eq=False)
class BifunctorData:
    left_source: FinCategory
    right_source: FinCategory
    target: FinCategory
    obj_map: dict
    mor_map: dict

    def __post_init__(self):
        ensure_valid(self.left_source)
        ensure_valid(self.right_source)
        ensure_valid(self.target)
        ls, rs, tg = self.left_source, self.right_source, self.target
        for x in ls.objects:
            for y in rs.objects:
                o = self.obj_map.get((x, y))
                _require(o is not None and 0 <= o < tg.n_objects,
                         f"bifunctor obj_map missing or bad at ({x},{y})")
        _require(len(self.obj_map) == ls.n_objects * rs.n_objects,
                 "bifunctor obj_map has extra entries")
        for f in ls.morphisms:
            for g in rs.morphisms:
                h = self.mor_map.get((f, g))
                _require(h is not None and 0 <= h < len(tg.mor_src),
                         f"bifunctor mor_map missing or bad at ({f},{g})")
                _require(
                    tg.mor_src[h] == self.obj_map[(ls.mor_src[f], rs.mor_src[g])]
                    and tg.mor_dst[h] == self.obj_map[(ls.mor_dst[f], rs.mor_dst[g])],
                    f"bifunctor mor_map entry ({f},{g}) incompatible with obj_map")
        _require(len(self.mor_map) == len(ls.mor_src) * len(rs.mor_src),
                 "bifunctor mor_map has extra entries")

    def on_obj(self, x: int, y: int) -> int:
        return self.obj_map[(x, y)]

    def on_mor(self, f: int, g: int) -> int:
        return self.mor_map[(f, g)]


def validate_bifunctor(B: BifunctorData) -> DiagramReport:
    """Identity preservation and interchange, exhaustively."""
    ls, rs, tg = B.left_source, B.right_source, B.target

    ids = None
    for x in ls.objects:
        for y in rs.objects:
            if B.mor_map[(ls.identity[x], rs.identity[y])] != \
                    tg.identity[B.obj_map[(x, y)]]:
                ids = (x, y)
                break
        if ids:
            break

    inter = None
    lpairs = [(f1, f2) for f1 in ls.morphisms for f2 in ls.morphisms
              if ls.mor_dst[f1] == ls.mor_src[f2]]
    rpairs = [(g1, g2) for g1 in rs.morphisms for g2 in rs.morphisms
              if rs.mor_dst[g1] == rs.mor_src[g2]]
    for f1, f2 in lpairs:
        for g1, g2 in rpairs:
            lhs = B.mor_map[(ls.composition[(f2, f1)], rs.composition[(g2, g1)])]
            rhs = tg.composition[(B.mor_map[(f2, g2)], B.mor_map[(f1, g1)])]
            if lhs != rhs:
                inter = (f1, g1, f2, g2)
                break
        if inter:
            break

    return DiagramReport((
        entry_for("bif.id", ids),
        entry_for("bif.interchange", inter),
    ))


@dataclass(frozen=True, eq=False)
class MonoidalData:
    category: FinCategory
    tensor: BifunctorData
    unit: int | None
    a: dict
    l: dict | None
    r: dict | None
    unital: bool

    def __post_init__(self):
        cat = ensure_valid(self.category)
        _require(cat.n_objects >= 1,
                 "an empty category cannot carry monoidal structure")
        _require(self.tensor.left_source is cat
                 and self.tensor.right_source is cat
                 and self.tensor.target is cat,
                 "tensor must be a bifunctor cat x cat -> cat")
        ob = self.tensor.obj_map
        keys = [(u, v, w) for u in cat.objects for v in cat.objects
                for w in cat.objects]
        _check_family(
            cat, self.a, keys,
            lambda k: (ob[(ob[(k[0], k[1])], k[2])], ob[(k[0], ob[(k[1], k[2])])]),
            "a")
        if self.unital:
            _require(self.unit is not None and 0 <= self.unit < cat.n_objects,
                     "unital monoidal data needs a unit object")
            _require(self.l is not None and self.r is not None,
                     "unital monoidal data needs l and r")
            e = self.unit
            _check_family(cat, self.l, list(cat.objects),
                          lambda v: (ob[(e, v)], v), "l")
            _check_family(cat, self.r, list(cat.objects),
                          lambda v: (ob[(v, e)], v), "r")
        else:
            _require(self.unit is None and self.l is None and self.r is None,
                     "non-unital monoidal data must omit unit, l and r")


@dataclass(frozen=True, eq=False)
class BraidedData:
    base: MonoidalData
    braiding: dict

    def __post_init__(self):
        if not self.base.unital:
            raise NonUnitalInput("braided structure lives on a unital monoidal category")
        cat = self.base.category
        ob = self.base.tensor.obj_map
        keys = [(v, w) for v in cat.objects for w in cat.objects]
        _check_family(cat, self.braiding, keys,
                      lambda k: (ob[(k[0], k[1])], ob[(k[1], k[0])]),
                      "β")

    @property
    def category(self) -> FinCategory:
        return self.base.category


@dataclass(frozen=True, eq=False)
class ModuleData:
    base: BraidedData
    carrier: FinCategory
    action: BifunctorData
    m: dict
    l_act: dict

    def __post_init__(self):
        vcat = self.base.category
        ensure_valid(self.carrier)
        _require(self.action.left_source is vcat
                 and self.action.right_source is self.carrier
                 and self.action.target is self.carrier,
                 "action must be a bifunctor V x M -> M")
        vob = self.base.base.tensor.obj_map
        aob = self.action.obj_map
        keys = [(v, w, x) for v in vcat.objects for w in vcat.objects
                for x in self.carrier.objects]
        _check_family(
            self.carrier, self.m, keys,
            lambda k: (aob[(vob[(k[0], k[1])], k[2])],
                       aob[(k[0], aob[(k[1], k[2])])]),
            "m")
        e = self.base.base.unit
        _check_family(self.carrier, self.l_act, list(self.carrier.objects),
                      lambda x: (aob[(e, x)], x), "lʳ")


@dataclass(frozen=True, eq=False)
class ModMonData:
    module: ModuleData
    monoidal: MonoidalData
    alpha1: dict
    alpha2: dict
    unital: bool

    def __post_init__(self):
        _require(self.monoidal.category is self.module.carrier,
                 "module and monoidal structure must share one carrier")
        _require(self.unital == self.monoidal.unital,
                 "unital flag must match the monoidal part")
        vcat = self.module.base.category
        mcat = self.module.carrier
        aob = self.module.action.obj_map
        tob = self.monoidal.tensor.obj_map
        keys = [(v, x, y) for v in vcat.objects for x in mcat.objects
                for y in mcat.objects]
        _check_family(
            mcat, self.alpha1, keys,
            lambda k: (tob[(aob[(k[0], k[1])], k[2])],
                       aob[(k[0], tob[(k[1], k[2])])]),
            "α¹")
        _check_family(
            mcat, self.alpha2, keys,
            lambda k: (tob[(k[1], aob[(k[0], k[2])])],
                       aob[(k[0], tob[(k[1], k[2])])]),
            "α²")

    @property
    def base(self) -> BraidedData:
        return self.module.base

    @property
    def carrier(self) -> FinCategory:
        return self.module.carrier


@dataclass(frozen=True, eq=False)
class MonoidalFunctorData:
    functor: FunctorData
    source: MonoidalData
    target: MonoidalData
    phi2: dict
    phi0: int | None

    def __post_init__(self):
        _require(self.functor.source is self.source.category
                 and self.functor.target is self.target.category,
                 "functor endpoints must match the monoidal carriers")
        src, tgt = self.source, self.target
        fo = self.functor.obj_map
        keys = [(u, v) for u in src.category.objects for v in src.category.objects]
        _check_family(
            tgt.category, self.phi2, keys,
            lambda k: (tgt.tensor.obj_map[(fo[k[0]], fo[k[1]])],
                       fo[src.tensor.obj_map[(k[0], k[1])]]),
            "φ₂")
        if src.unital and tgt.unital:
            _require(self.phi0 is not None, "unital monoidal functor needs φ₀")
            cat = tgt.category
            _require(cat.mor_src[self.phi0] == tgt.unit
                     and cat.mor_dst[self.phi0] == fo[src.unit],
                     "φ₀ must map the target unit to F(unit)")
            invert_iso(cat, self.phi0)
        else:
            _require(self.phi0 is None,
                     "φ₀ is only defined between unital monoidal categories")

    @property
    def unital(self) -> bool:
        return self.phi0 is not None


def identity_monoidal_functor(M: MonoidalData) -> MonoidalFunctorData:
    cat = M.category
    phi2 = {(u, v): cat.identity[M.tensor.obj_map[(u, v)]]
            for u in cat.objects for v in cat.objects}
    phi0 = cat.identity[M.unit] if M.unital else None
    return MonoidalFunctorData(identity_functor(cat), M, M, phi2, phi0)


@dataclass(frozen=True, eq=False)
class ModuleFunctorData:
    functor: FunctorData
    source: ModuleData
    target: ModuleData
    s: dict

    def __post_init__(self):
        _require(self.source.base is self.target.base,
                 "module functors live over one fixed base")
        _require(self.functor.source is self.source.carrier
                 and self.functor.target is self.target.carrier,
                 "functor endpoints must match the module carriers")
        vcat = self.source.base.category
        fo = self.functor.obj_map
        aob_t = self.target.action.obj_map
        aob_s = self.source.action.obj_map
        keys = [(v, x) for v in vcat.objects for x in self.source.carrier.objects]
        _check_family(
            self.target.carrier, self.s, keys,
            lambda k: (aob_t[(k[0], fo[k[1]])], fo[aob_s[(k[0], k[1])]]),
            "s")


@dataclass(frozen=True, eq=False)
class ModMonFunctorData:
    monoidal_part: MonoidalFunctorData
    module_part: ModuleFunctorData

    def __post_init__(self):
        _require(self.monoidal_part.functor is self.module_part.functor,
                 "monoidal and module part must share one underlying functor")

    @property
    def functor(self) -> FunctorData:
        return self.monoidal_part.functor

    @property
    def phi2(self) -> dict:
        return self.monoidal_part.phi2

    @property
    def phi0(self) -> int | None:
        return self.monoidal_part.phi0

    @property
    def s(self) -> dict:
        return self.module_part.s


def identity_modmon_functor(D: ModMonData) -> ModMonFunctorData:
    cat = D.carrier
    mon = identity_monoidal_functor(D.monoidal)
    vcat = D.module.base.category
    s = {(v, x): cat.identity[D.module.action.obj_map[(v, x)]]
         for v in vcat.objects for x in cat.objects}
    return ModMonFunctorData(
        mon, ModuleFunctorData(mon.functor, D.module, D.module, s))


def compose_monoidal_functors(F: MonoidalFunctorData,
                              G: MonoidalFunctorData) -> MonoidalFunctorData:
    """F followed by G, with the standard composite phi2 and phi0."""
    from .errors import SourceTargetMismatch
    from .fincat import compose_functors
    if F.target is not G.source:
        raise SourceTargetMismatch("monoidal functors are not composable")
    comp = G.target.category.composition
    gm, fo = G.functor.mor_map, F.functor.obj_map
    phi2 = {
        (u, v): comp[(gm[F.phi2[(u, v)]], G.phi2[(fo[u], fo[v])])]
        for u in F.source.category.objects for v in F.source.category.objects}
    phi0 = None
    if F.phi0 is not None and G.phi0 is not None:
        phi0 = comp[(gm[F.phi0], G.phi0)]
    return MonoidalFunctorData(compose_functors(F.functor, G.functor),
                               F.source, G.target, phi2, phi0)


def compose_module_functors(F: ModuleFunctorData,
                            G: ModuleFunctorData) -> ModuleFunctorData:
    """F followed by G, with the standard composite s."""
    from .errors import SourceTargetMismatch
    from .fincat import compose_functors
    if F.target is not G.source:
        raise SourceTargetMismatch("module functors are not composable")
    comp = G.target.carrier.composition
    gm, fo = G.functor.mor_map, F.functor.obj_map
    s = {(v, x): comp[(gm[F.s[(v, x)]], G.s[(v, fo[x])])]
         for v in F.source.base.category.objects
         for x in F.source.carrier.objects}
    return ModuleFunctorData(compose_functors(F.functor, G.functor),
                             F.source, G.target, s)
