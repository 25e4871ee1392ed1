"""Run the applicable checkers over every section of a bundle."""

from __future__ import annotations

from .bundle import Bundle
from .center import check_pair_2morphism, check_pair_morphism, validate_pair
from .coherence import (check_braided, check_modmon, check_modmon_functor,
                        check_module, check_module_functor, check_module_nat,
                        check_monoidal, check_monoidal_functor,
                        check_monoidal_nat, derived_laws_suite)
from .errors import DanglingReference
from .fincat import validate_category, validate_functor, validate_nat_transf
from .report import DiagramReport
from .structures import validate_bifunctor

SUITES = ("all", "monoidal", "braided", "module", "modmon", "functor", "pair")


def run_suite(bundle: Bundle, suite: str = "all"):
    """Reports for every section the suite covers, as (kind, name, report)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    want = lambda s: suite in ("all", s)
    results = []

    if want("monoidal"):
        for name, M in sorted(bundle.monoidal.items()):
            results.append(("monoidal", name, DiagramReport.merge(
                validate_category(M.category),
                validate_bifunctor(M.tensor),
                check_monoidal(M),
                derived_laws_suite(M))))

    if want("braided"):
        for name, B in sorted(bundle.braided.items()):
            results.append(("braided", name, DiagramReport.merge(
                check_braided(B), derived_laws_suite(B))))

    if want("module"):
        for name, D in sorted(bundle.modules.items()):
            results.append(("module", name, DiagramReport.merge(
                validate_bifunctor(D.action),
                check_module(D),
                derived_laws_suite(D))))

    if want("modmon"):
        for name, D in sorted(bundle.modmon.items()):
            results.append(("modmon", name, DiagramReport.merge(
                check_modmon(D), derived_laws_suite(D))))

    if want("functor"):
        for name, rec in sorted(bundle.functors.items()):
            parts = [validate_functor(rec.underlying)]
            if rec.kind in ("monoidal", "modmon"):
                mon = rec.data if rec.kind == "monoidal" else rec.data.monoidal_part
                parts.append(check_monoidal_functor(mon))
            if rec.kind in ("module", "modmon"):
                mod = rec.data if rec.kind == "module" else rec.data.module_part
                parts.append(check_module_functor(mod))
            if rec.kind == "modmon":
                parts.append(check_modmon_functor(
                    rec.data, rec.source_modmon, rec.target_modmon))
            results.append(("functor", name, DiagramReport.merge(*parts)))

        for name, rec in sorted(bundle.two_morphisms.items()):
            if rec.between != "functors":
                continue
            src = bundle.functors[rec.source_name]
            tgt = bundle.functors[rec.target_name]
            if src.kind != tgt.kind:
                raise DanglingReference(
                    f"two_morphism {name!r} runs between different functor kinds")
            parts = [validate_nat_transf(rec.nat)]
            if src.kind in ("monoidal", "modmon"):
                s_mon = src.data if src.kind == "monoidal" else src.data.monoidal_part
                t_mon = tgt.data if tgt.kind == "monoidal" else tgt.data.monoidal_part
                parts.append(check_monoidal_nat(rec.nat, s_mon, t_mon))
            if src.kind in ("module", "modmon"):
                s_mod = src.data if src.kind == "module" else src.data.module_part
                t_mod = tgt.data if tgt.kind == "module" else tgt.data.module_part
                parts.append(check_module_nat(rec.nat, s_mod, t_mod))
            results.append(("two_morphism", name, DiagramReport.merge(*parts)))

    if want("pair"):
        for name, P in sorted(bundle.pairs.items()):
            results.append(("pair", name, validate_pair(P)))
        for name, M in sorted(bundle.pair_morphisms.items()):
            results.append(("pair_morphism", name,
                            check_pair_morphism(M.source, M.target, M)))
        for name, rec in sorted(bundle.two_morphisms.items()):
            if rec.between != "pair_morphisms":
                continue
            src = bundle.pair_morphisms[rec.source_name]
            tgt = bundle.pair_morphisms[rec.target_name]
            results.append(("pair_2morphism", name,
                            check_pair_2morphism(rec.nat, src, tgt)))

    return results


def suite_passed(results) -> bool:
    return all(report.passed for _, _, report in results)
