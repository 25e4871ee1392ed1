"""Bundle files: the JSON interchange format for every structure kind.

A bundle is a single JSON document with a mandatory version field and
one list of records per section kind; records reference earlier
sections by name.  Tables serialize as flat integer arrays:

  categories   mor: [src,dst]*            composition: [g,f,g.f]*
  monoidal     tensor_obj: n*n row-major  tensor_mor: m*m row-major
               a: (u*n+v)*n+w             l, r: per object
  braided      beta: u*n+v
  modules      action_obj: v*nM+x         action_mor: f*mM+g
               m: (v*nV+w)*nM+x           l_act: per carrier object
  modmon       alpha1/alpha2: (v*nM+x)*nM+y
  functors     obj_map, mor_map per id; phi2: u*n+v; s: v*nM+x
  pairs        lift: v*nT+t               phi2: v*nV+w
  pair_morphisms  phi2: t*nT+u            gamma: per base object
  two_morphisms   components: per source object
  specs        mult: g*n+h  omega: (g*n+h)*n+k  c: g*n+h
  centers      half_braidings: z*nT+x     underlying: per center morphism

Loading resolves all cross-references and rebuilds the in-memory
structures; saving emits a canonical ordering (fixed key order,
sections sorted by name), so canonical files round-trip byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .center import CenterCategory, HalfBraiding, PairData, PairMorphismData, pair_morphism
from .errors import DanglingReference, ParseError, VersionMismatch
from .fincat import FinCategory, FunctorData, NatTransfData
from .generators import PointedSpec
from .structures import (BifunctorData, BraidedData, ModMonData,
                         ModMonFunctorData, ModuleData, ModuleFunctorData,
                         MonoidalData, MonoidalFunctorData)

FORMAT_VERSION = "1"

KIND_ORDER = ("categories", "monoidal", "braided", "modules", "modmon",
              "functors", "pairs", "pair_morphisms", "two_morphisms",
              "specs", "centers")


@dataclass(frozen=True, eq=False)
class FunctorRecord:
    kind: str                 # plain | monoidal | module | modmon
    data: object
    source_modmon: ModMonData | None = None
    target_modmon: ModMonData | None = None

    @property
    def underlying(self) -> FunctorData:
        if self.kind == "plain":
            return self.data
        return self.data.functor


@dataclass(frozen=True, eq=False)
class TwoMorphismRecord:
    between: str              # functors | pair_morphisms
    source_name: str
    target_name: str
    nat: NatTransfData


@dataclass(eq=False)
class Bundle:
    name: str
    plain: dict
    categories: dict = field(default_factory=dict)
    monoidal: dict = field(default_factory=dict)
    braided: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    modmon: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    pairs: dict = field(default_factory=dict)
    pair_morphisms: dict = field(default_factory=dict)
    two_morphisms: dict = field(default_factory=dict)
    specs: dict = field(default_factory=dict)
    centers: dict = field(default_factory=dict)

    @property
    def version(self) -> str:
        return self.plain["version"]


def _ints(rec, key, expect_len=None):
    val = rec.get(key)
    if not isinstance(val, list) or any(not isinstance(x, int) for x in val):
        raise ParseError(f"field {key!r} must be an integer array")
    if expect_len is not None and len(val) != expect_len:
        raise ParseError(f"field {key!r} has length {len(val)}, expected {expect_len}")
    return val


def _int(rec, key):
    val = rec.get(key)
    if not isinstance(val, int):
        raise ParseError(f"field {key!r} must be an integer")
    return val


def _str(rec, key):
    val = rec.get(key)
    if not isinstance(val, str):
        raise ParseError(f"field {key!r} must be a string")
    return val


def _resolve(table: dict, name: str, kind: str):
    try:
        return table[name]
    except KeyError:
        raise DanglingReference(f"{kind} section {name!r} is not defined") from None


def _unflatten2(flat, n1, n2):
    return {(i, j): flat[i * n2 + j] for i in range(n1) for j in range(n2)}


def _unflatten3(flat, n1, n2, n3):
    return {(i, j, k): flat[(i * n2 + j) * n3 + k]
            for i in range(n1) for j in range(n2) for k in range(n3)}


def _flatten2(table, n1, n2):
    return [table[(i, j)] for i in range(n1) for j in range(n2)]


def _flatten3(table, n1, n2, n3):
    return [table[(i, j, k)]
            for i in range(n1) for j in range(n2) for k in range(n3)]


def from_plain(plain: dict) -> Bundle:
    """Resolve and build every section of a parsed bundle document."""
    if not isinstance(plain, dict):
        raise ParseError("bundle document must be a JSON object")
    version = plain.get("version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(f"unsupported bundle version {version!r}")
    name = plain.get("name")
    if not isinstance(name, str):
        raise ParseError("bundle needs a string name")

    bundle = Bundle(name=name, plain={})
    canon = {"version": FORMAT_VERSION, "name": name}

    def records(kind):
        recs = plain.get(kind, [])
        if not isinstance(recs, list):
            raise ParseError(f"section {kind!r} must be a list")
        seen = set()
        for rec in recs:
            if not isinstance(rec, dict):
                raise ParseError(f"records in {kind!r} must be objects")
            rname = _str(rec, "name")
            if rname in seen:
                raise ParseError(f"duplicate {kind} record {rname!r}")
            seen.add(rname)
        return sorted(recs, key=lambda r: r["name"])

    out = {kind: [] for kind in KIND_ORDER}

    for rec in records("categories"):
        n = _int(rec, "objects")
        mor = _ints(rec, "mor")
        if len(mor) % 2:
            raise ParseError("mor array must have even length")
        n_mor = len(mor) // 2
        identity = _ints(rec, "identity", n)
        comp_flat = _ints(rec, "composition")
        if len(comp_flat) % 3:
            raise ParseError("composition array length must be divisible by 3")
        comp = {}
        for i in range(0, len(comp_flat), 3):
            g, f, h = comp_flat[i:i + 3]
            comp[(g, f)] = h
        cat = FinCategory(n, tuple(mor[0::2]), tuple(mor[1::2]),
                          tuple(identity), comp)
        bundle.categories[rec["name"]] = cat
        out["categories"].append({
            "name": rec["name"], "objects": n, "mor": mor,
            "identity": identity,
            "composition": [x for (g, f), h in sorted(comp.items())
                            for x in (g, f, h)],
        })

    for rec in records("monoidal"):
        cat = _resolve(bundle.categories, _str(rec, "category"), "category")
        n, m = cat.n_objects, len(cat.mor_src)
        tensor = BifunctorData(
            cat, cat, cat,
            _unflatten2(_ints(rec, "tensor_obj", n * n), n, n),
            _unflatten2(_ints(rec, "tensor_mor", m * m), m, m))
        unital = rec.get("unital")
        if not isinstance(unital, bool):
            raise ParseError("monoidal record needs boolean 'unital'")
        a = _unflatten3(_ints(rec, "a", n ** 3), n, n, n)
        if unital:
            M = MonoidalData(cat, tensor, _int(rec, "unit"), a,
                             dict(enumerate(_ints(rec, "l", n))),
                             dict(enumerate(_ints(rec, "r", n))), True)
        else:
            M = MonoidalData(cat, tensor, None, a, None, None, False)
        bundle.monoidal[rec["name"]] = M
        out["monoidal"].append({
            "name": rec["name"], "category": rec["category"],
            "unital": unital, "unit": M.unit,
            "tensor_obj": _flatten2(tensor.obj_map, n, n),
            "tensor_mor": _flatten2(tensor.mor_map, m, m),
            "a": _flatten3(a, n, n, n),
            "l": None if not unital else [M.l[v] for v in cat.objects],
            "r": None if not unital else [M.r[v] for v in cat.objects],
        })

    for rec in records("braided"):
        M = _resolve(bundle.monoidal, _str(rec, "monoidal"), "monoidal")
        n = M.category.n_objects
        B = BraidedData(M, _unflatten2(_ints(rec, "beta", n * n), n, n))
        bundle.braided[rec["name"]] = B
        out["braided"].append({
            "name": rec["name"], "monoidal": rec["monoidal"],
            "beta": _flatten2(B.braiding, n, n),
        })

    for rec in records("modules"):
        base = _resolve(bundle.braided, _str(rec, "base"), "braided")
        carrier = _resolve(bundle.categories, _str(rec, "carrier"), "category")
        nV, nM = base.category.n_objects, carrier.n_objects
        mV, mM = len(base.category.mor_src), len(carrier.mor_src)
        action = BifunctorData(
            base.category, carrier, carrier,
            _unflatten2(_ints(rec, "action_obj", nV * nM), nV, nM),
            _unflatten2(_ints(rec, "action_mor", mV * mM), mV, mM))
        D = ModuleData(base, carrier, action,
                       _unflatten3(_ints(rec, "m", nV * nV * nM), nV, nV, nM),
                       dict(enumerate(_ints(rec, "l_act", nM))))
        bundle.modules[rec["name"]] = D
        out["modules"].append({
            "name": rec["name"], "base": rec["base"], "carrier": rec["carrier"],
            "action_obj": _flatten2(action.obj_map, nV, nM),
            "action_mor": _flatten2(action.mor_map, mV, mM),
            "m": _flatten3(D.m, nV, nV, nM),
            "l_act": [D.l_act[x] for x in carrier.objects],
        })

    for rec in records("modmon"):
        module = _resolve(bundle.modules, _str(rec, "module"), "module")
        M = _resolve(bundle.monoidal, _str(rec, "monoidal"), "monoidal")
        nV, nM = module.base.category.n_objects, module.carrier.n_objects
        unital = rec.get("unital")
        if not isinstance(unital, bool):
            raise ParseError("modmon record needs boolean 'unital'")
        D = ModMonData(
            module, M,
            _unflatten3(_ints(rec, "alpha1", nV * nM * nM), nV, nM, nM),
            _unflatten3(_ints(rec, "alpha2", nV * nM * nM), nV, nM, nM),
            unital)
        bundle.modmon[rec["name"]] = D
        out["modmon"].append({
            "name": rec["name"], "module": rec["module"],
            "monoidal": rec["monoidal"], "unital": unital,
            "alpha1": _flatten3(D.alpha1, nV, nM, nM),
            "alpha2": _flatten3(D.alpha2, nV, nM, nM),
        })

    for rec in records("functors"):
        kind = _str(rec, "kind")
        scat = _resolve(bundle.categories, _str(rec, "source_category"), "category")
        tcat = _resolve(bundle.categories, _str(rec, "target_category"), "category")
        functor = FunctorData(scat, tcat,
                              tuple(_ints(rec, "obj_map", scat.n_objects)),
                              tuple(_ints(rec, "mor_map", len(scat.mor_src))))
        entry = {"name": rec["name"], "kind": kind,
                 "source_category": rec["source_category"],
                 "target_category": rec["target_category"],
                 "obj_map": list(functor.obj_map),
                 "mor_map": list(functor.mor_map)}
        mon = mod = None
        src_mm = tgt_mm = None
        if kind in ("monoidal", "modmon"):
            src_m = _resolve(bundle.monoidal, _str(rec, "source_monoidal"), "monoidal")
            tgt_m = _resolve(bundle.monoidal, _str(rec, "target_monoidal"), "monoidal")
            n = src_m.category.n_objects
            phi0 = rec.get("phi0")
            mon = MonoidalFunctorData(
                functor, src_m, tgt_m,
                _unflatten2(_ints(rec, "phi2", n * n), n, n), phi0)
            entry.update({"source_monoidal": rec["source_monoidal"],
                          "target_monoidal": rec["target_monoidal"],
                          "phi2": _flatten2(mon.phi2, n, n), "phi0": phi0})
        if kind in ("module", "modmon"):
            src_d = _resolve(bundle.modules, _str(rec, "source_module"), "module")
            tgt_d = _resolve(bundle.modules, _str(rec, "target_module"), "module")
            nV = src_d.base.category.n_objects
            nM = src_d.carrier.n_objects
            mod = ModuleFunctorData(
                functor, src_d, tgt_d,
                _unflatten2(_ints(rec, "s", nV * nM), nV, nM))
            entry.update({"source_module": rec["source_module"],
                          "target_module": rec["target_module"],
                          "s": _flatten2(mod.s, nV, nM)})
        if kind == "plain":
            data = functor
        elif kind == "monoidal":
            data = mon
        elif kind == "module":
            data = mod
        elif kind == "modmon":
            data = ModMonFunctorData(mon, mod)
            src_mm = _resolve(bundle.modmon, _str(rec, "source_modmon"), "modmon")
            tgt_mm = _resolve(bundle.modmon, _str(rec, "target_modmon"), "modmon")
            entry.update({"source_modmon": rec["source_modmon"],
                          "target_modmon": rec["target_modmon"]})
        else:
            raise ParseError(f"unknown functor kind {kind!r}")
        bundle.functors[rec["name"]] = FunctorRecord(kind, data, src_mm, tgt_mm)
        out["functors"].append(entry)

    for rec in records("pairs"):
        base = _resolve(bundle.braided, _str(rec, "base"), "braided")
        target = _resolve(bundle.monoidal, _str(rec, "target"), "monoidal")
        vcat, tcat = base.category, target.category
        nV, nT = vcat.n_objects, tcat.n_objects
        functor = FunctorData(vcat, tcat,
                              tuple(_ints(rec, "obj_map", nV)),
                              tuple(_ints(rec, "mor_map", len(vcat.mor_src))))
        lift_flat = _ints(rec, "lift", nV * nT)
        lift = {v: HalfBraiding(functor.obj_map[v],
                                {x: lift_flat[v * nT + x] for x in range(nT)})
                for v in range(nV)}
        P = PairData(base, target, functor, lift,
                     _unflatten2(_ints(rec, "phi2", nV * nV), nV, nV),
                     _int(rec, "phi0"))
        bundle.pairs[rec["name"]] = P
        out["pairs"].append({
            "name": rec["name"], "base": rec["base"], "target": rec["target"],
            "obj_map": list(functor.obj_map), "mor_map": list(functor.mor_map),
            "lift": lift_flat, "phi2": _flatten2(P.phi2, nV, nV),
            "phi0": P.phi0,
        })

    for rec in records("pair_morphisms"):
        source = _resolve(bundle.pairs, _str(rec, "source"), "pair")
        target = _resolve(bundle.pairs, _str(rec, "target"), "pair")
        scat = source.target.category
        tcat = target.target.category
        nT = scat.n_objects
        functor = FunctorData(scat, tcat,
                              tuple(_ints(rec, "obj_map", nT)),
                              tuple(_ints(rec, "mor_map", len(scat.mor_src))))
        G = MonoidalFunctorData(
            functor, source.target, target.target,
            _unflatten2(_ints(rec, "phi2", nT * nT), nT, nT),
            rec.get("phi0"))
        gamma = _ints(rec, "gamma", source.base.category.n_objects)
        M = pair_morphism(source, target, G, gamma)
        bundle.pair_morphisms[rec["name"]] = M
        out["pair_morphisms"].append({
            "name": rec["name"], "source": rec["source"], "target": rec["target"],
            "obj_map": list(functor.obj_map), "mor_map": list(functor.mor_map),
            "phi2": _flatten2(G.phi2, nT, nT), "phi0": G.phi0,
            "gamma": list(gamma),
        })

    for rec in records("two_morphisms"):
        between = _str(rec, "between")
        if between == "functors":
            src = _resolve(bundle.functors, _str(rec, "source"), "functor")
            tgt = _resolve(bundle.functors, _str(rec, "target"), "functor")
            sf, tf = src.underlying, tgt.underlying
        elif between == "pair_morphisms":
            src = _resolve(bundle.pair_morphisms, _str(rec, "source"), "pair morphism")
            tgt = _resolve(bundle.pair_morphisms, _str(rec, "target"), "pair morphism")
            sf, tf = src.monoidal.functor, tgt.monoidal.functor
        else:
            raise ParseError(f"unknown two_morphism target {between!r}")
        comps = _ints(rec, "components", sf.source.n_objects)
        nat = NatTransfData(sf, tf, tuple(comps))
        bundle.two_morphisms[rec["name"]] = TwoMorphismRecord(
            between, rec["source"], rec["target"], nat)
        out["two_morphisms"].append({
            "name": rec["name"], "between": between,
            "source": rec["source"], "target": rec["target"],
            "components": comps,
        })

    for rec in records("specs"):
        flat = _ints(rec, "mult")
        n = int(round(len(flat) ** 0.5))
        if n * n != len(flat):
            raise ParseError("mult array must be square")
        mult = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
        N = _int(rec, "n_scalars")
        omega = _unflatten3(_ints(rec, "omega", n ** 3), n, n, n)
        c = rec.get("c")
        spec = PointedSpec(mult, N, omega,
                           None if c is None else _unflatten2(
                               _ints(rec, "c", n * n), n, n))
        bundle.specs[rec["name"]] = spec
        out["specs"].append({
            "name": rec["name"], "mult": flat, "n_scalars": N,
            "omega": _flatten3(spec.omega, n, n, n),
            "c": None if spec.c is None else _flatten2(spec.c, n, n),
        })

    for rec in records("centers"):
        base = _resolve(bundle.monoidal, _str(rec, "base"), "monoidal")
        zcat = _resolve(bundle.categories, _str(rec, "category"), "category")
        zmon = _resolve(bundle.monoidal, _str(rec, "monoidal"), "monoidal")
        zbr = _resolve(bundle.braided, _str(rec, "braided"), "braided")
        carriers = _ints(rec, "carriers", zcat.n_objects)
        nT = base.category.n_objects
        hb_flat = _ints(rec, "half_braidings", zcat.n_objects * nT)
        objs = tuple(
            HalfBraiding(carriers[z], {x: hb_flat[z * nT + x] for x in range(nT)})
            for z in range(zcat.n_objects))
        underlying = _ints(rec, "underlying", len(zcat.mor_src))
        forgetful = FunctorData(zcat, base.category,
                                tuple(carriers), tuple(underlying))
        bundle.centers[rec["name"]] = CenterCategory(
            base, objs, zcat, zmon, zbr, forgetful, tuple(underlying))
        out["centers"].append({
            "name": rec["name"], "base": rec["base"],
            "category": rec["category"], "monoidal": rec["monoidal"],
            "braided": rec["braided"], "carriers": carriers,
            "half_braidings": hb_flat, "underlying": underlying,
        })

    for kind in KIND_ORDER:
        if out[kind]:
            canon[kind] = out[kind]
    bundle.plain = canon
    return bundle


def to_plain(bundle: Bundle) -> dict:
    """Deep copy of the canonical plain form (safe to mutate)."""
    return json.loads(json.dumps(bundle.plain))


def dumps_bundle(bundle: Bundle) -> str:
    return json.dumps(bundle.plain, indent=1) + "\n"


def save_bundle(bundle: Bundle, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_bundle(bundle))


def load_bundle(path) -> Bundle:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read bundle: {exc}") from None
    try:
        plain = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"bundle does not parse at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from None
    return from_plain(plain)


# ---------------------------------------------------------------------------
# component-family slots, used by the mutation fuzzer

@dataclass(frozen=True)
class Slot:
    kind: str
    name: str
    family: str
    index: tuple | int | None
    flat_pos: int | None
    current: int
    category: FinCategory


def iter_family_slots(bundle: Bundle):
    """Every mutable component position, in canonical order."""
    slots = []

    for name in sorted(bundle.monoidal):
        M = bundle.monoidal[name]
        cat = M.category
        n = cat.n_objects
        for (u, v, w) in sorted(M.a):
            slots.append(Slot("monoidal", name, "a", (u, v, w),
                              (u * n + v) * n + w, M.a[(u, v, w)], cat))
        if M.unital:
            for v in cat.objects:
                slots.append(Slot("monoidal", name, "l", v, v, M.l[v], cat))
            for v in cat.objects:
                slots.append(Slot("monoidal", name, "r", v, v, M.r[v], cat))

    for name in sorted(bundle.braided):
        B = bundle.braided[name]
        cat = B.category
        n = cat.n_objects
        for (u, v) in sorted(B.braiding):
            slots.append(Slot("braided", name, "beta", (u, v),
                              u * n + v, B.braiding[(u, v)], cat))

    for name in sorted(bundle.modules):
        D = bundle.modules[name]
        nV = D.base.category.n_objects
        nM = D.carrier.n_objects
        for (v, w, x) in sorted(D.m):
            slots.append(Slot("modules", name, "m", (v, w, x),
                              (v * nV + w) * nM + x, D.m[(v, w, x)], D.carrier))
        for x in D.carrier.objects:
            slots.append(Slot("modules", name, "l_act", x, x,
                              D.l_act[x], D.carrier))

    for name in sorted(bundle.modmon):
        D = bundle.modmon[name]
        nM = D.carrier.n_objects
        for fam, table in (("alpha1", D.alpha1), ("alpha2", D.alpha2)):
            for (v, x, y) in sorted(table):
                slots.append(Slot("modmon", name, fam, (v, x, y),
                                  (v * nM + x) * nM + y, table[(v, x, y)],
                                  D.carrier))

    for name in sorted(bundle.functors):
        rec = bundle.functors[name]
        if rec.kind in ("monoidal", "modmon"):
            mon = rec.data if rec.kind == "monoidal" else rec.data.monoidal_part
            n = mon.source.category.n_objects
            tcat = mon.target.category
            for (u, v) in sorted(mon.phi2):
                slots.append(Slot("functors", name, "phi2", (u, v),
                                  u * n + v, mon.phi2[(u, v)], tcat))
            if mon.phi0 is not None:
                slots.append(Slot("functors", name, "phi0", None, None,
                                  mon.phi0, tcat))
        if rec.kind in ("module", "modmon"):
            mod = rec.data if rec.kind == "module" else rec.data.module_part
            nM = mod.source.carrier.n_objects
            for (v, x) in sorted(mod.s):
                slots.append(Slot("functors", name, "s", (v, x),
                                  v * nM + x, mod.s[(v, x)],
                                  mod.target.carrier))

    for name in sorted(bundle.pairs):
        P = bundle.pairs[name]
        tcat = P.target.category
        nV = P.base.category.n_objects
        nT = tcat.n_objects
        for v in range(nV):
            for x in range(nT):
                slots.append(Slot("pairs", name, "lift", (v, x),
                                  v * nT + x, P.lift[v].components[x], tcat))
        for (v, w) in sorted(P.phi2):
            slots.append(Slot("pairs", name, "phi2", (v, w),
                              v * nV + w, P.phi2[(v, w)], tcat))
        slots.append(Slot("pairs", name, "phi0", None, None, P.phi0, tcat))

    for name in sorted(bundle.pair_morphisms):
        M = bundle.pair_morphisms[name]
        tcat = M.target.target.category
        nT = M.source.target.category.n_objects
        for (t, u) in sorted(M.monoidal.phi2):
            slots.append(Slot("pair_morphisms", name, "phi2", (t, u),
                              t * nT + u, M.monoidal.phi2[(t, u)], tcat))
        if M.monoidal.phi0 is not None:
            slots.append(Slot("pair_morphisms", name, "phi0", None, None,
                              M.monoidal.phi0, tcat))
        for v, c in enumerate(M.gamma.components):
            slots.append(Slot("pair_morphisms", name, "gamma", v, v, c, tcat))

    for name in sorted(bundle.two_morphisms):
        rec = bundle.two_morphisms[name]
        tcat = rec.nat.source_functor.target
        for x, c in enumerate(rec.nat.components):
            slots.append(Slot("two_morphisms", name, "components", x, x,
                              c, tcat))

    return slots


def set_slot(plain: dict, slot: Slot, new: int) -> None:
    """Apply one component replacement to a plain bundle document."""
    for rec in plain[slot.kind]:
        if rec["name"] == slot.name:
            if slot.flat_pos is None:
                rec[slot.family] = new
            else:
                rec[slot.family][slot.flat_pos] = new
            return
    raise DanglingReference(f"{slot.kind} record {slot.name!r} not found")


# ---------------------------------------------------------------------------
# building bundles from in-memory structures

class BundleBuilder:
    """Accumulates sections from built objects; shared substructures are
    emitted once and referenced by name."""

    def __init__(self, name: str):
        self.plain = {"version": FORMAT_VERSION, "name": name}
        for kind in KIND_ORDER:
            self.plain[kind] = []
        self._known = {}

    def _remember(self, obj, kind, name):
        self._known[id(obj)] = (kind, name)
        return name

    def _name_of(self, obj):
        entry = self._known.get(id(obj))
        return entry[1] if entry else None

    def add_category(self, name: str, cat: FinCategory) -> str:
        if self._name_of(cat):
            return self._name_of(cat)
        m = len(cat.mor_src)
        self.plain["categories"].append({
            "name": name, "objects": cat.n_objects,
            "mor": [x for f in range(m) for x in (cat.mor_src[f], cat.mor_dst[f])],
            "identity": list(cat.identity),
            "composition": [x for (g, f), h in sorted(cat.composition.items())
                            for x in (g, f, h)],
        })
        return self._remember(cat, "categories", name)

    def add_monoidal(self, name: str, M: MonoidalData) -> str:
        if self._name_of(M):
            return self._name_of(M)
        cat_name = self.add_category(f"{name}.cat", M.category)
        n = M.category.n_objects
        m = len(M.category.mor_src)
        self.plain["monoidal"].append({
            "name": name, "category": cat_name, "unital": M.unital,
            "unit": M.unit,
            "tensor_obj": _flatten2(M.tensor.obj_map, n, n),
            "tensor_mor": _flatten2(M.tensor.mor_map, m, m),
            "a": _flatten3(M.a, n, n, n),
            "l": None if not M.unital else [M.l[v] for v in M.category.objects],
            "r": None if not M.unital else [M.r[v] for v in M.category.objects],
        })
        return self._remember(M, "monoidal", name)

    def add_braided(self, name: str, B: BraidedData) -> str:
        if self._name_of(B):
            return self._name_of(B)
        mon_name = self.add_monoidal(f"{name}.mon", B.base)
        n = B.category.n_objects
        self.plain["braided"].append({
            "name": name, "monoidal": mon_name,
            "beta": _flatten2(B.braiding, n, n),
        })
        return self._remember(B, "braided", name)

    def add_module(self, name: str, D: ModuleData) -> str:
        if self._name_of(D):
            return self._name_of(D)
        base_name = self.add_braided(f"{name}.base", D.base)
        carrier_name = self.add_category(f"{name}.carrier", D.carrier)
        nV, nM = D.base.category.n_objects, D.carrier.n_objects
        mV, mM = len(D.base.category.mor_src), len(D.carrier.mor_src)
        self.plain["modules"].append({
            "name": name, "base": base_name, "carrier": carrier_name,
            "action_obj": _flatten2(D.action.obj_map, nV, nM),
            "action_mor": _flatten2(D.action.mor_map, mV, mM),
            "m": _flatten3(D.m, nV, nV, nM),
            "l_act": [D.l_act[x] for x in D.carrier.objects],
        })
        return self._remember(D, "modules", name)

    def add_modmon(self, name: str, D: ModMonData) -> str:
        if self._name_of(D):
            return self._name_of(D)
        module_name = self.add_module(f"{name}.module", D.module)
        mon_name = self.add_monoidal(f"{name}.mon", D.monoidal)
        nV, nM = D.base.category.n_objects, D.carrier.n_objects
        self.plain["modmon"].append({
            "name": name, "module": module_name, "monoidal": mon_name,
            "unital": D.unital,
            "alpha1": _flatten3(D.alpha1, nV, nM, nM),
            "alpha2": _flatten3(D.alpha2, nV, nM, nM),
        })
        return self._remember(D, "modmon", name)

    def add_functor(self, name: str, data, source_modmon: ModMonData | None = None,
                    target_modmon: ModMonData | None = None) -> str:
        if self._name_of(data):
            return self._name_of(data)
        if isinstance(data, FunctorData):
            kind, functor = "plain", data
        elif isinstance(data, MonoidalFunctorData):
            kind, functor = "monoidal", data.functor
        elif isinstance(data, ModuleFunctorData):
            kind, functor = "module", data.functor
        elif isinstance(data, ModMonFunctorData):
            kind, functor = "modmon", data.functor
        else:
            raise TypeError(f"not a functor datum: {type(data).__name__}")
        rec = {"name": name, "kind": kind,
               "source_category": self.add_category(f"{name}.src", functor.source),
               "target_category": self.add_category(f"{name}.tgt", functor.target),
               "obj_map": list(functor.obj_map),
               "mor_map": list(functor.mor_map)}
        if kind in ("monoidal", "modmon"):
            mon = data if kind == "monoidal" else data.monoidal_part
            n = mon.source.category.n_objects
            rec.update({
                "source_monoidal": self.add_monoidal(f"{name}.srcmon", mon.source),
                "target_monoidal": self.add_monoidal(f"{name}.tgtmon", mon.target),
                "phi2": _flatten2(mon.phi2, n, n), "phi0": mon.phi0})
        if kind in ("module", "modmon"):
            mod = data if kind == "module" else data.module_part
            nV = mod.source.base.category.n_objects
            nM = mod.source.carrier.n_objects
            rec.update({
                "source_module": self.add_module(f"{name}.srcmod", mod.source),
                "target_module": self.add_module(f"{name}.tgtmod", mod.target),
                "s": _flatten2(mod.s, nV, nM)})
        if kind == "modmon":
            if source_modmon is None or target_modmon is None:
                raise TypeError("modmon functor records need their endpoints")
            rec.update({
                "source_modmon": self.add_modmon(f"{name}.srcmm", source_modmon),
                "target_modmon": self.add_modmon(f"{name}.tgtmm", target_modmon)})
        self.plain["functors"].append(rec)
        return self._remember(data, "functors", name)

    def add_pair(self, name: str, P: PairData) -> str:
        if self._name_of(P):
            return self._name_of(P)
        nV = P.base.category.n_objects
        nT = P.target.category.n_objects
        self.plain["pairs"].append({
            "name": name,
            "base": self.add_braided(f"{name}.base", P.base),
            "target": self.add_monoidal(f"{name}.target", P.target),
            "obj_map": list(P.functor.obj_map),
            "mor_map": list(P.functor.mor_map),
            "lift": [P.lift[v].components[x]
                     for v in range(nV) for x in range(nT)],
            "phi2": _flatten2(P.phi2, nV, nV),
            "phi0": P.phi0,
        })
        return self._remember(P, "pairs", name)

    def add_pair_morphism(self, name: str, M: PairMorphismData) -> str:
        if self._name_of(M):
            return self._name_of(M)
        nT = M.source.target.category.n_objects
        self.plain["pair_morphisms"].append({
            "name": name,
            "source": self.add_pair(f"{name}.src", M.source),
            "target": self.add_pair(f"{name}.tgt", M.target),
            "obj_map": list(M.monoidal.functor.obj_map),
            "mor_map": list(M.monoidal.functor.mor_map),
            "phi2": _flatten2(M.monoidal.phi2, nT, nT),
            "phi0": M.monoidal.phi0,
            "gamma": list(M.gamma.components),
        })
        return self._remember(M, "pair_morphisms", name)

    def add_two_morphism(self, name: str, between: str, source_name: str,
                         target_name: str, components) -> str:
        self.plain["two_morphisms"].append({
            "name": name, "between": between,
            "source": source_name, "target": target_name,
            "components": list(components),
        })
        return name

    def add_spec(self, name: str, spec: PointedSpec) -> str:
        if self._name_of(spec):
            return self._name_of(spec)
        n = spec.n_elements
        self.plain["specs"].append({
            "name": name,
            "mult": [spec.mult[i][j] for i in range(n) for j in range(n)],
            "n_scalars": spec.n_scalars,
            "omega": _flatten3(spec.omega, n, n, n),
            "c": None if spec.c is None else _flatten2(spec.c, n, n),
        })
        return self._remember(spec, "specs", name)

    def add_center(self, name: str, zc: CenterCategory) -> str:
        if self._name_of(zc):
            return self._name_of(zc)
        nT = zc.base.category.n_objects
        self.plain["centers"].append({
            "name": name,
            "base": self.add_monoidal(f"{name}.base", zc.base),
            "category": self.add_category(f"{name}.cat", zc.category),
            "monoidal": self.add_monoidal(f"{name}.mon", zc.monoidal),
            "braided": self.add_braided(f"{name}.br", zc.braided),
            "carriers": [z.carrier for z in zc.objects],
            "half_braidings": [z.components[x]
                               for z in zc.objects for x in range(nT)],
            "underlying": list(zc.mor_underlying),
        })
        return self._remember(zc, "centers", name)

    def build(self) -> Bundle:
        plain = {k: v for k, v in self.plain.items()
                 if k in ("version", "name") or v}
        return from_plain(plain)
