"""Command-line surface.

Exit codes: 0 every report passes, 1 a coherence check failed,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bridge import (gamma_from_s, pair_from_mmc, psi_morphism, psi_object,
                     roundtrip_mmc_witness, roundtrip_pair_witness,
                     _modmon_functor_tables_diff)
from .bundle import Bundle, BundleBuilder, load_bundle, save_bundle
from .center import default_cap, drinfeld_center
from .coherence import (check_braided, check_modmon, check_modmon_functor,
                        check_module_nat, check_monoidal, check_monoidal_nat,
                        derived_laws_suite)
from .errors import (DanglingReference, MalformedTable, ParseError,
                     SkelcatError, VersionMismatch)
from .fincat import validate_functor, validate_nat_transf
from .generators import (PointedSpec, mutate, pointed_braided,
                         pointed_category, self_action_pair)
from .report import DiagramReport
from .suite import SUITES, run_suite, suite_passed

USAGE_ERRORS = (ParseError, VersionMismatch, DanglingReference, MalformedTable,
                ValueError, OSError)


def _emit(results, fmt: str, bundle_name: str) -> int:
    ok = suite_passed(results)
    if fmt == "json":
        doc = {
            "bundle": bundle_name,
            "overall": "pass" if ok else "fail",
            "sections": [
                {"kind": kind, "name": name,
                 "overall": "pass" if rep.passed else "fail",
                 "entries": rep.to_jsonable()}
                for kind, name, rep in results],
        }
        print(json.dumps(doc, indent=1))
    else:
        for kind, name, rep in results:
            print(f"{kind} {name}:")
            print(rep.pretty())
        print(f"bundle {bundle_name}: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_validate(args) -> int:
    bundle = load_bundle(args.bundle)
    results = run_suite(bundle, args.suite)
    return _emit(results, args.format, bundle.name)


def _cmd_center(args) -> int:
    bundle = load_bundle(args.bundle)
    cap = args.cap if args.cap is not None else default_cap()
    results = []
    builder = BundleBuilder(f"{bundle.name}.center")
    for name in sorted(bundle.monoidal):
        M = bundle.monoidal[name]
        zc = drinfeld_center(M, cap)
        report = DiagramReport.merge(
            check_monoidal(zc.monoidal),
            check_braided(zc.braided),
            derived_laws_suite(zc.braided),
            validate_functor(zc.forgetful))
        results.append(("center", name, report))
        print(f"center of {name}: {len(zc.objects)} objects, "
              f"{len(zc.mor_underlying)} morphisms")
        builder.add_center(f"{name}.Z", zc)
    if args.out:
        save_bundle(builder.build(), args.out)
    return _emit(results, args.format, bundle.name)


def _cmd_psi(args) -> int:
    bundle = load_bundle(args.bundle)
    results = []
    builder = BundleBuilder(f"{bundle.name}.psi")
    images = {}
    for name in sorted(bundle.pairs):
        P = bundle.pairs[name]
        from .center import validate_pair
        pre = validate_pair(P)
        results.append(("pair", name, pre))
        if not pre.passed:
            continue
        D = psi_object(P)
        images[name] = D
        results.append(("modmon", f"{name}.psi", DiagramReport.merge(
            check_modmon(D), derived_laws_suite(D))))
        builder.add_modmon(f"{name}.psi", D)
    for name in sorted(bundle.pair_morphisms):
        M = bundle.pair_morphisms[name]
        F = psi_morphism(M)
        src = psi_object(M.source)
        dst = psi_object(M.target)
        results.append(("modmon_functor", f"{name}.psi",
                        check_modmon_functor(F, src, dst)))
        builder.add_functor(f"{name}.psi", F, src, dst)
    for name in sorted(bundle.two_morphisms):
        rec = bundle.two_morphisms[name]
        if rec.between != "pair_morphisms":
            continue
        M = bundle.pair_morphisms[rec.source_name]
        Mp = bundle.pair_morphisms[rec.target_name]
        FM, FMp = psi_morphism(M), psi_morphism(Mp)
        results.append(("modmon_nat", f"{name}.psi", DiagramReport.merge(
            validate_nat_transf(rec.nat),
            check_monoidal_nat(rec.nat, FM.monoidal_part, FMp.monoidal_part),
            check_module_nat(rec.nat, FM.module_part, FMp.module_part))))
    if args.out:
        save_bundle(builder.build(), args.out)
    return _emit(results, args.format, bundle.name)


def _cmd_depsi(args) -> int:
    bundle = load_bundle(args.bundle)
    from .center import validate_pair
    results = []
    builder = BundleBuilder(f"{bundle.name}.depsi")
    for name in sorted(bundle.modmon):
        D = bundle.modmon[name]
        if not D.unital:
            continue
        P = pair_from_mmc(D)
        results.append(("pair", f"{name}.pair", validate_pair(P)))
        builder.add_pair(f"{name}.pair", P)
    if args.out:
        save_bundle(builder.build(), args.out)
    return _emit(results, args.format, bundle.name)


def _cmd_roundtrip(args) -> int:
    bundle = load_bundle(args.bundle)
    results = []
    if args.direction == "mmc":
        for name in sorted(bundle.modmon):
            D = bundle.modmon[name]
            if not D.unital:
                continue
            witness, report = roundtrip_mmc_witness(D)
            results.append(("roundtrip", name, report))
    else:
        for name in sorted(bundle.pairs):
            witness, report = roundtrip_pair_witness(bundle.pairs[name])
            results.append(("roundtrip", name, report))
    return _emit(results, args.format, bundle.name)


def _cmd_homcheck(args) -> int:
    bundle = load_bundle(args.bundle)
    from .report import entry_for
    results = []
    for name in sorted(bundle.pair_morphisms):
        M = bundle.pair_morphisms[name]
        F = psi_morphism(M)
        back = gamma_from_s(F, M.source, M.target)
        gamma_diff = None
        for v, (p, q) in enumerate(zip(M.gamma.components,
                                       back.gamma.components)):
            if p != q:
                gamma_diff = (v,)
                break
        again = psi_morphism(back)
        s_diff = _modmon_functor_tables_diff(F, again)
        report = DiagramReport((
            entry_for("homcheck.γ", gamma_diff),
            entry_for("homcheck.s", s_diff),
        ))
        results.append(("pair_morphism", name, report))
    return _emit(results, args.format, bundle.name)


def _load_spec_file(path) -> tuple:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ParseError("spec file must be a JSON object")
    if "cyclic" in doc:
        from .generators import cyclic_group
        mult = cyclic_group(int(doc["cyclic"]))
    else:
        flat = doc.get("mult")
        if not isinstance(flat, list):
            raise ParseError("spec needs 'cyclic' or a flat 'mult' table")
        n = int(round(len(flat) ** 0.5))
        if n * n != len(flat):
            raise ParseError("mult array must be square")
        mult = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
    n = len(mult)
    N = int(doc.get("n_scalars", 1))

    def table(key, rank):
        flat = doc.get(key)
        if flat is None:
            return {}
        if rank == 3:
            return {(g, h, k): flat[(g * n + h) * n + k]
                    for g in range(n) for h in range(n) for k in range(n)}
        return {(g, h): flat[g * n + h] for g in range(n) for h in range(n)}

    omega = table("omega", 3)
    c = table("c", 2) if "c" in doc and doc["c"] is not None else None
    name = doc.get("name", "generated")
    return name, PointedSpec(mult, N, omega, c)


def _cmd_examples_gen(args) -> int:
    name, spec = _load_spec_file(args.spec)
    builder = BundleBuilder(name)
    builder.add_spec(f"{name}.spec", spec)
    if spec.c is None:
        M = pointed_category(spec)
        builder.add_monoidal(name, M)
    else:
        B = pointed_braided(spec)
        builder.add_braided(name, B)
        P = self_action_pair(B)
        builder.add_pair(f"{name}.selfpair", P)
    bundle = builder.build()
    if args.out:
        save_bundle(bundle, args.out)
        print(f"wrote {args.out}")
    else:
        from .bundle import dumps_bundle
        sys.stdout.write(dumps_bundle(bundle))
    return 0


def _cmd_fuzz(args) -> int:
    bundle = load_bundle(args.bundle)
    detected = 0
    silent = []
    diagram_hits = {}
    for trial in range(args.trials):
        seed = args.seed + trial
        mutant, descriptor = mutate(bundle, seed)
        results = run_suite(mutant, "all")
        failing = [e.diagram for _, _, rep in results for e in rep.failing()]
        if failing:
            detected += 1
            for d in failing:
                diagram_hits[d] = diagram_hits.get(d, 0) + 1
        else:
            silent.append((seed, descriptor))
    print(f"trials: {args.trials}  detected: {detected}  "
          f"silent: {len(silent)}")
    for diagram in sorted(diagram_hits):
        print(f"  {diagram_hits[diagram]:6d}  {diagram}")
    for seed, descriptor in silent:
        print(f"  SILENT seed={seed}  {descriptor}")
    return 0 if not silent else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skelcat",
        description="coherence checks for skeletal finite categories")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="run checker suites over a bundle")
    p.add_argument("bundle")
    p.add_argument("--suite", choices=SUITES, default="all")
    add_fmt(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("center", help="Drinfeld centers of the monoidal sections")
    p.add_argument("bundle")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("-o", "--out")
    add_fmt(p)
    p.set_defaults(func=_cmd_center)

    p = sub.add_parser("psi", help="module monoidal images of the pair sections")
    p.add_argument("bundle")
    p.add_argument("-o", "--out")
    add_fmt(p)
    p.set_defaults(func=_cmd_psi)

    p = sub.add_parser("depsi", help="pairs from the module monoidal sections")
    p.add_argument("bundle")
    p.add_argument("-o", "--out")
    add_fmt(p)
    p.set_defaults(func=_cmd_depsi)

    p = sub.add_parser("roundtrip", help="build and verify round-trip witnesses")
    p.add_argument("bundle")
    p.add_argument("--direction", choices=("mmc", "pair"), required=True)
    add_fmt(p)
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("homcheck",
                       help="round-trip the hom-level correspondence")
    p.add_argument("bundle")
    add_fmt(p)
    p.set_defaults(func=_cmd_homcheck)

    p = sub.add_parser("examples", help="example generators")
    esub = p.add_subparsers(dest="examples_command", required=True)
    g = esub.add_parser("gen", help="generate a bundle from a pointed spec")
    g.add_argument("--spec", required=True)
    g.add_argument("-o", "--out")
    g.set_defaults(func=_cmd_examples_gen)

    p = sub.add_parser("fuzz", help="mutation campaign with detection stats")
    p.add_argument("bundle")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=_cmd_fuzz)

    return parser


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SkelcatError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
