"""Concrete finite instances: pointed categories from group data.

A pointed category over a group G with scalar modulus N has the group
elements as objects, hom(g,g) = Z/N under addition (k stands for the
root of unity exp(2*pi*i*k/N)) and empty hom-sets elsewhere.  The
tensor product multiplies objects and adds scalars; the associator is
a normalized exponent function omega on object triples, the braiding
an exponent function c on pairs.

Whether an exponent function is admissible is decided by running the
generic pentagon/hexagon checkers on the generated tables; no cocycle
condition is hard-coded anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .center import PairData
from .coherence import (check_braided, check_monoidal, hexagon1_holds_at,
                        hexagon2_holds_at, pentagon_holds_at)
from .errors import (MalformedTable, NoMutableComponent, NotAbelianCocycle,
                     NotACocycle, NotNormalized, SearchSpaceExceeded)
from .fincat import FinCategory, identity_functor, is_iso
from .structures import BifunctorData, BraidedData, MonoidalData


def cyclic_group(n: int) -> tuple:
    """Multiplication table of Z/n."""
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def validate_group(mult) -> int:
    """Exhaustive group-law check; returns the identity index."""
    n = len(mult)
    for row in mult:
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise MalformedTable("multiplication table is not square over 0..n-1")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                    raise MalformedTable(f"multiplication not associative at {(a, b, c)}")
    e = None
    for cand in range(n):
        if all(mult[cand][g] == g and mult[g][cand] == g for g in range(n)):
            e = cand
            break
    if e is None:
        raise MalformedTable("no identity element")
    for a in range(n):
        if not any(mult[a][b] == e and mult[b][a] == e for b in range(n)):
            raise MalformedTable(f"element {a} has no inverse")
    return e


@dataclass(frozen=True, eq=False)
class PointedSpec:
    mult: tuple
    n_scalars: int
    omega: dict
    c: dict | None = None

    def __post_init__(self):
        e = validate_group(self.mult)
        object.__setattr__(self, "e", e)
        n, N = len(self.mult), self.n_scalars
        if N < 1:
            raise MalformedTable("scalar modulus must be >= 1")
        omega = {}
        for g in range(n):
            for h in range(n):
                for k in range(n):
                    val = self.omega.get((g, h, k), 0) % N
                    if val and e in (g, h, k):
                        raise NotNormalized(
                            f"omega{(g, h, k)} = {val} on a unit slot")
                    omega[(g, h, k)] = val
        object.__setattr__(self, "omega", omega)
        if self.c is not None:
            c = {}
            for g in range(n):
                for h in range(n):
                    val = self.c.get((g, h), 0) % N
                    if val and e in (g, h):
                        raise NotNormalized(f"c{(g, h)} = {val} on a unit slot")
                    c[(g, h)] = val
            object.__setattr__(self, "c", c)

    @property
    def n_elements(self) -> int:
        return len(self.mult)


def _pointed_substrate(mult, N: int):
    """Category plus tensor tables; independent of omega and c."""
    n = len(mult)
    mor_src = tuple(g for g in range(n) for _ in range(N))
    identity = tuple(g * N for g in range(n))
    composition = {}
    for g in range(n):
        base = g * N
        for i in range(N):
            for j in range(N):
                composition[(base + j, base + i)] = base + (i + j) % N
    cat = FinCategory(n, mor_src, mor_src, identity, composition)
    obj_map = {(g, h): mult[g][h] for g in range(n) for h in range(n)}
    mor_map = {}
    for f in range(n * N):
        g, i = divmod(f, N)
        for f2 in range(n * N):
            h, j = divmod(f2, N)
            mor_map[(f, f2)] = mult[g][h] * N + (i + j) % N
    return cat, obj_map, mor_map


def _assoc_table(spec: PointedSpec, cat, obj_map) -> dict:
    n, N = spec.n_elements, spec.n_scalars
    mult = spec.mult
    return {(g, h, k): mult[mult[g][h]][k] * N + spec.omega[(g, h, k)]
            for g in range(n) for h in range(n) for k in range(n)}


def pointed_category(spec: PointedSpec) -> MonoidalData:
    """Monoidal data for the spec; fails if the pentagon checker rejects it."""
    cat, obj_map, mor_map = _pointed_substrate(spec.mult, spec.n_scalars)
    tensor = BifunctorData(cat, cat, cat, obj_map, mor_map)
    a = _assoc_table(spec, cat, obj_map)
    unitors = {v: cat.identity[v] for v in cat.objects}
    M = MonoidalData(cat, tensor, spec.e, a, dict(unitors), dict(unitors), True)
    report = check_monoidal(M)
    if not report.passed:
        bad = report.failing()[0]
        raise NotACocycle(f"{bad.diagram} fails at {bad.counterexample}")
    return M


def pointed_braided(spec: PointedSpec) -> BraidedData:
    """Braided data for a spec with c; fails if a hexagon checker rejects it."""
    if spec.c is None:
        raise MalformedTable("spec carries no braiding exponents")
    mult = spec.mult
    n = spec.n_elements
    for g in range(n):
        for h in range(n):
            if mult[g][h] != mult[h][g]:
                raise NotAbelianCocycle(f"group not abelian at {(g, h)}")
    M = pointed_category(spec)
    beta = {(g, h): mult[g][h] * spec.n_scalars + spec.c[(g, h)]
            for g in range(n) for h in range(n)}
    B = BraidedData(M, beta)
    report = check_braided(B)
    if not report.passed:
        bad = report.failing()[0]
        raise NotAbelianCocycle(f"{bad.diagram} fails at {bad.counterexample}")
    return B


def _free_slot_dfs(n_slots, n_scalars, instance_lists, set_value, check, emit):
    """Depth-first assignment over free slots in lexicographic order.

    instance_lists[i] holds the constraint instances whose referenced
    free slots all lie among the first i+1 slots; each is re-checked
    through the generic diagram evaluator as soon as its data is
    complete, pruning dead branches early.  Constraint instances that
    reference no free slot are covered by the full checker run on each
    surviving candidate.
    """
    values = [0] * n_slots

    def walk(i):
        if i == n_slots:
            emit(tuple(values))
            return
        for val in range(n_scalars):
            values[i] = val
            set_value(i, val)
            if all(check(inst) for inst in instance_lists[i]):
                walk(i + 1)

    walk(0)


def enumerate_cocycles(mult, n_scalars: int, cap: int = 10 ** 6) -> list:
    """All normalized associator exponent functions whose pointed category
    passes the pentagon checker, in lexicographic order of free-slot values."""
    e = validate_group(mult)
    n = len(mult)
    N = n_scalars
    slots = sorted((g, h, k) for g in range(n) for h in range(n)
                   for k in range(n) if e not in (g, h, k))
    size = N ** len(slots)
    if size > cap:
        raise SearchSpaceExceeded(size, cap)

    cat, obj_map, mor_map = _pointed_substrate(mult, N)
    slot_pos = {s: i for i, s in enumerate(slots)}
    zero_a = {(g, h, k): mult[mult[g][h]][k] * N
              for g in range(n) for h in range(n) for k in range(n)}

    # pentagon instance (u,v,w,x) references five associator slots; it is
    # checked as soon as the last free slot among them is assigned
    instance_lists = [[] for _ in slots]
    for u in range(n):
        for v in range(n):
            for w in range(n):
                for x in range(n):
                    refs = [(u, v, w), (u, mult[v][w], x), (v, w, x),
                            (mult[u][v], w, x), (u, v, mult[w][x])]
                    free = [slot_pos[r] for r in refs if r in slot_pos]
                    if free:
                        instance_lists[max(free)].append((u, v, w, x))

    a_work = dict(zero_a)

    def set_value(i, val):
        a_work[slots[i]] = zero_a[slots[i]] + val

    def check(inst):
        u, v, w, x = inst
        return pentagon_holds_at(cat, obj_map, mor_map, a_work, u, v, w, x)

    survivors = []

    def emit(values):
        omega = {s: v for s, v in zip(slots, values)}
        spec = PointedSpec(mult, N, omega)
        pointed_category(spec)  # full checker run; raises if inconsistent
        survivors.append(spec.omega)

    if not slots:
        emit(())
        return survivors
    _free_slot_dfs(len(slots), N, instance_lists, set_value, check, emit)
    return survivors


def enumerate_braidings(mult, n_scalars: int, omega: dict,
                        cap: int = 10 ** 6) -> list:
    """All normalized braiding exponent functions on C(G, omega, N) that
    pass both hexagon checkers, in lexicographic order."""
    e = validate_group(mult)
    n = len(mult)
    N = n_scalars
    for g in range(n):
        for h in range(n):
            if mult[g][h] != mult[h][g]:
                return []
    spec = PointedSpec(mult, N, omega)
    M = pointed_category(spec)
    cat, obj_map, mor_map = M.category, M.tensor.obj_map, M.tensor.mor_map

    slots = sorted((g, h) for g in range(n) for h in range(n)
                   if e not in (g, h))
    size = N ** len(slots)
    if size > cap:
        raise SearchSpaceExceeded(size, cap)
    slot_pos = {s: i for i, s in enumerate(slots)}
    zero_b = {(g, h): mult[g][h] * N for g in range(n) for h in range(n)}

    instance_lists = [[] for _ in slots]
    for u in range(n):
        for v in range(n):
            for w in range(n):
                refs1 = [(u, mult[v][w]), (u, v), (u, w)]
                refs2 = [(mult[u][v], w), (v, w), (u, w)]
                free1 = [slot_pos[r] for r in refs1 if r in slot_pos]
                free2 = [slot_pos[r] for r in refs2 if r in slot_pos]
                if free1:
                    instance_lists[max(free1)].append((1, u, v, w))
                if free2:
                    instance_lists[max(free2)].append((2, u, v, w))

    b_work = dict(zero_b)

    def set_value(i, val):
        b_work[slots[i]] = zero_b[slots[i]] + val

    def check(inst):
        which, u, v, w = inst
        if which == 1:
            return hexagon1_holds_at(cat, obj_map, mor_map, M.a, b_work, u, v, w)
        return hexagon2_holds_at(cat, obj_map, mor_map, M.a, b_work, u, v, w)

    survivors = []

    def emit(values):
        c = {s: v for s, v in zip(slots, values)}
        spec_c = PointedSpec(mult, N, omega, c)
        pointed_braided(spec_c)  # full checker run; raises if inconsistent
        survivors.append(spec_c.c)

    if not slots:
        emit(())
        return survivors
    _free_slot_dfs(len(slots), N, instance_lists, set_value, check, emit)
    return survivors


def self_action_pair(V: BraidedData) -> PairData:
    """The pair with T = V, F = Id and the braiding itself as the lift."""
    from .center import HalfBraiding, validate_pair

    cat = V.category
    lift = {v: HalfBraiding(v, {x: V.braiding[(v, x)] for x in cat.objects})
            for v in cat.objects}
    phi2 = {(v, w): cat.identity[V.base.tensor.obj_map[(v, w)]]
            for v in cat.objects for w in cat.objects}
    P = PairData(V, V.base, identity_functor(cat), lift, phi2,
                 cat.identity[V.base.unit])
    report = validate_pair(P)
    if not report.passed:
        bad = report.failing()[0]
        raise NotAbelianCocycle(
            f"self-action pair fails {bad.diagram} at {bad.counterexample}")
    return P


@dataclass(frozen=True)
class MutationDescriptor:
    kind: str
    name: str
    family: str
    index: tuple | int
    old: int
    new: int


def mutate(bundle, seed: int):
    """Replace exactly one component of one structure family with a
    different (invertible, so the mutant still constructs) element of
    the same hom-set.  Deterministic in the seed.

    Returns (mutated bundle, MutationDescriptor).
    """
    import random

    from .bundle import from_plain, iter_family_slots, set_slot, to_plain

    plain = to_plain(bundle)
    slots = []
    for slot in iter_family_slots(bundle):
        cat, current = slot.category, slot.current
        alts = [m for m in cat.hom(cat.mor_src[current], cat.mor_dst[current])
                if m != current and is_iso(cat, m)]
        if alts:
            slots.append((slot, alts))
    if not slots:
        raise NoMutableComponent("no family component has an alternative")
    rng = random.Random(seed)
    slot, alts = slots[rng.randrange(len(slots))]
    new = alts[rng.randrange(len(alts))]
    set_slot(plain, slot, new)
    descriptor = MutationDescriptor(slot.kind, slot.name, slot.family,
                                    slot.index, slot.current, new)
    return from_plain(plain), descriptor
