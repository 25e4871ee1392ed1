"""Finite categories as explicit integer tables.

Objects and morphisms are dense non-negative integers; equality of
morphisms is equality of ids, so every diagram equation is a table
lookup.  Composition is stored sparse: exactly the composable pairs.
All types here are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (MalformedTable, NotComposable, NotInvertible,
                     SourceTargetMismatch)
from .report import DiagramReport, entry_for


@dataclass(frozen=True, eq=False)
class FinCategory:
    n_objects: int
    mor_src: tuple
    mor_dst: tuple
    identity: tuple
    composition: dict

    def __post_init__(self):
        hom = {}
        for f in range(len(self.mor_src)):
            hom.setdefault((self.mor_src[f], self.mor_dst[f]), []).append(f)
        object.__setattr__(self, "_hom",
                           {k: tuple(v) for k, v in hom.items()})
        object.__setattr__(self, "_iso_cache", {})

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def morphisms(self) -> range:
        return range(len(self.mor_src))

    def src(self, f: int) -> int:
        return self.mor_src[f]

    def dst(self, f: int) -> int:
        return self.mor_dst[f]

    def hom(self, x: int, y: int) -> tuple:
        return self._hom.get((x, y), ())

    def id_(self, x: int) -> int:
        return self.identity[x]


def compose(cat: FinCategory, g: int, f: int) -> int:
    """g after f.  Raises NotComposable when dst(f) != src(g)."""
    if cat.mor_dst[f] != cat.mor_src[g]:
        raise NotComposable(f"dst({f})={cat.mor_dst[f]} != src({g})={cat.mor_src[g]}")
    try:
        return cat.composition[(g, f)]
    except KeyError:
        raise MalformedTable(f"missing composition entry for ({g}, {f})") from None


def chain(cat: FinCategory, legs) -> int:
    """Compose a list of morphisms in application order (first leg first).

    A type error in the chain means the data shapes are wrong, not that a
    diagram fails, so it surfaces as MalformedTable.
    """
    legs = list(legs)
    if not legs:
        raise MalformedTable("empty composition chain")
    acc = legs[0]
    for f in legs[1:]:
        if cat.mor_dst[acc] != cat.mor_src[f]:
            raise MalformedTable(
                f"chain breaks: dst({acc})={cat.mor_dst[acc]} != src({f})={cat.mor_src[f]}")
        acc = cat.composition[(f, acc)]
    return acc


def invert_iso(cat: FinCategory, f: int) -> int:
    """Two-sided inverse of f, found by searching hom(dst f, src f)."""
    cached = cat._iso_cache.get(f)
    if cached is not None:
        return cached
    x, y = cat.mor_src[f], cat.mor_dst[f]
    for g in cat.hom(y, x):
        if (cat.composition[(g, f)] == cat.identity[x]
                and cat.composition[(f, g)] == cat.identity[y]):
            cat._iso_cache[f] = g
            cat._iso_cache[g] = f
            return g
    raise NotInvertible(f"morphism {f}: {x} -> {y} has no two-sided inverse")


def is_iso(cat: FinCategory, f: int) -> bool:
    try:
        invert_iso(cat, f)
        return True
    except NotInvertible:
        return False


def _check_structure(cat: FinCategory):
    n_mor = len(cat.mor_src)
    if len(cat.mor_dst) != n_mor:
        raise MalformedTable("mor_src/mor_dst length mismatch")
    for f in range(n_mor):
        if not (0 <= cat.mor_src[f] < cat.n_objects
                and 0 <= cat.mor_dst[f] < cat.n_objects):
            raise MalformedTable(f"morphism {f} has out-of-range endpoints")
    if len(cat.identity) != cat.n_objects:
        raise MalformedTable("identity table length mismatch")
    for x in cat.objects:
        e = cat.identity[x]
        if not 0 <= e < n_mor:
            raise MalformedTable(f"identity of object {x} out of range")
        if cat.mor_src[e] != x or cat.mor_dst[e] != x:
            raise MalformedTable(f"identity of object {x} is not an endomorphism of it")
    for (g, f), h in cat.composition.items():
        if not (0 <= f < n_mor and 0 <= g < n_mor and 0 <= h < n_mor):
            raise MalformedTable(f"composition entry ({g},{f})->{h} out of range")
        if cat.mor_dst[f] != cat.mor_src[g]:
            raise MalformedTable(f"composition entry for non-composable pair ({g},{f})")
        if cat.mor_src[h] != cat.mor_src[f] or cat.mor_dst[h] != cat.mor_dst[g]:
            raise MalformedTable(f"composition entry ({g},{f})->{h} has wrong endpoints")
    for f in range(n_mor):
        for g in range(n_mor):
            if cat.mor_dst[f] == cat.mor_src[g] and (g, f) not in cat.composition:
                raise MalformedTable(f"composition undefined on composable pair ({g},{f})")


def validate_category(cat: FinCategory) -> DiagramReport:
    """Associativity and unit laws, checked over every composable tuple.

    This loop is the exhaustive oracle for being a category; the
    counterexample is the first violating tuple in ascending id order.
    """
    _check_structure(cat)
    comp = cat.composition

    # assoc: h∘(g∘f) == (h∘g)∘f for all composable f, g, h
    assoc = None
    for f in cat.morphisms:
        y = cat.mor_dst[f]
        for g in cat.morphisms:
            if cat.mor_src[g] != y:
                continue
            gf = comp[(g, f)]
            z = cat.mor_dst[g]
            for h in cat.morphisms:
                if cat.mor_src[h] != z:
                    continue
                if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                    assoc = (f, g, h)
                    break
            if assoc:
                break
        if assoc:
            break

    unit_l = None
    unit_r = None
    for f in cat.morphisms:
        if comp[(cat.identity[cat.mor_dst[f]], f)] != f:
            unit_l = (f,)
            break
    for f in cat.morphisms:
        if comp[(f, cat.identity[cat.mor_src[f]])] != f:
            unit_r = (f,)
            break

    return DiagramReport((
        entry_for("assoc", assoc),
        entry_for("unit.l", unit_l),
        entry_for("unit.r", unit_r),
    ))


def ensure_valid(cat: FinCategory) -> FinCategory:
    """Validate once per instance; structure bundles refuse bad substrates."""
    if getattr(cat, "_validated", False):
        return cat
    report = validate_category(cat)
    if not report.passed:
        raise MalformedTable(
            f"substrate is not a category: {report.failing()[0]}")
    object.__setattr__(cat, "_validated", True)
    return cat


@dataclass(frozen=True, eq=False)
class FunctorData:
    source: FinCategory
    target: FinCategory
    obj_map: tuple
    mor_map: tuple


def apply_obj(F: FunctorData, x: int) -> int:
    return F.obj_map[x]


def apply_mor(F: FunctorData, f: int) -> int:
    return F.mor_map[f]


def identity_functor(cat: FinCategory) -> FunctorData:
    return FunctorData(cat, cat, tuple(cat.objects), tuple(cat.morphisms))


def validate_functor(F: FunctorData) -> DiagramReport:
    """Endpoint compatibility, identity and composition preservation."""
    src, dst = F.source, F.target
    if len(F.obj_map) != src.n_objects or len(F.mor_map) != len(src.mor_src):
        raise MalformedTable("functor table length mismatch")
    for x in src.objects:
        if not 0 <= F.obj_map[x] < dst.n_objects:
            raise MalformedTable(f"obj_map({x}) out of range")
    for f in src.morphisms:
        if not 0 <= F.mor_map[f] < len(dst.mor_src):
            raise MalformedTable(f"mor_map({f}) out of range")

    srcdst = None
    for f in src.morphisms:
        ff = F.mor_map[f]
        if (dst.mor_src[ff] != F.obj_map[src.mor_src[f]]
                or dst.mor_dst[ff] != F.obj_map[src.mor_dst[f]]):
            srcdst = (f,)
            break

    ids = None
    for x in src.objects:
        if F.mor_map[src.identity[x]] != dst.identity[F.obj_map[x]]:
            ids = (x,)
            break

    comp = None
    if srcdst is None:
        for f in src.morphisms:
            y = src.mor_dst[f]
            for g in src.morphisms:
                if src.mor_src[g] != y:
                    continue
                lhs = F.mor_map[src.composition[(g, f)]]
                rhs = dst.composition[(F.mor_map[g], F.mor_map[f])]
                if lhs != rhs:
                    comp = (f, g)
                    break
            if comp:
                break

    return DiagramReport((
        entry_for("funct.srcdst", srcdst),
        entry_for("funct.id", ids),
        entry_for("funct.comp", comp),
    ))


def same_functor(F: FunctorData, G: FunctorData) -> bool:
    """Equality as tables over identical categories."""
    return F is G or (F.source is G.source and F.target is G.target
                      and F.obj_map == G.obj_map and F.mor_map == G.mor_map)


def compose_functors(F: FunctorData, G: FunctorData) -> FunctorData:
    """F followed by G (pointwise table composition)."""
    if F.target is not G.source:
        raise SourceTargetMismatch("target of first functor is not source of second")
    return FunctorData(
        F.source, G.target,
        tuple(G.obj_map[x] for x in F.obj_map),
        tuple(G.mor_map[f] for f in F.mor_map))


@dataclass(frozen=True, eq=False)
class NatTransfData:
    source_functor: FunctorData
    target_functor: FunctorData
    components: tuple

    @property
    def category(self) -> FinCategory:
        return self.source_functor.target


def identity_nat(F: FunctorData) -> NatTransfData:
    return NatTransfData(
        F, F, tuple(F.target.identity[F.obj_map[x]] for x in F.source.objects))


def validate_nat_transf(eta: NatTransfData) -> DiagramReport:
    """Component endpoints plus the naturality square for every morphism."""
    F, G = eta.source_functor, eta.target_functor
    if F.source is not G.source or F.target is not G.target:
        raise SourceTargetMismatch("natural transformation needs parallel functors")
    src, dst = F.source, F.target
    if len(eta.components) != src.n_objects:
        raise MalformedTable("component table length mismatch")

    srcdst = None
    for x in src.objects:
        c = eta.components[x]
        if not 0 <= c < len(dst.mor_src):
            raise MalformedTable(f"component({x}) out of range")
        if dst.mor_src[c] != F.obj_map[x] or dst.mor_dst[c] != G.obj_map[x]:
            srcdst = (x,)
            break

    nat = None
    if srcdst is None:
        for f in src.morphisms:
            x, y = src.mor_src[f], src.mor_dst[f]
            lhs = dst.composition[(G.mor_map[f], eta.components[x])]
            rhs = dst.composition[(eta.components[y], F.mor_map[f])]
            if lhs != rhs:
                nat = (f,)
                break

    return DiagramReport((
        entry_for("nat.srcdst", srcdst),
        entry_for("nat.sq", nat),
    ))
