"""``bicross`` command line: verify, build, factor, demo, export.

Exit codes: 0 when every checked axiom holds, 1 on an axiom failure or a
failed factorization, 2 on usage, parse or schema errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from .group import (
    BicocycleGroupData,
    FiniteGroup,
    NormalizationViolated,
    NotAGroup,
    NotBijective,
    build_bicocycle_group,
    factor_group,
    normalization_violations,
    verify_group_conditions,
    verify_group_table,
)
from .kernel import DimensionMismatch, ShapeMismatch, SingularMatrix, SubspacePair
from .lie import (
    BicocycleSumData,
    GradedLieData,
    LieAlgebra,
    build_bicocycle_sum,
    decompose,
    graded_verify,
    verify_lie_axioms,
    verify_matched_pair,
)
from .quantum import (
    BialgebraTensor,
    BicocycleData,
    CdccData,
    CdcpData,
    CoalgebraTensor,
    NotAlgebraMap,
    NotCoalgebraMap,
    NotInvertible,
    bicocycle_invariants,
    build_bicocycle_bialgebra,
    build_cdcc,
    build_cdcp,
    cdcc_invariants,
    cdcp_invariants,
    factorize_bialgebra,
    factorize_cdcc,
    pullback_bialgebra,
    verify_bialgebra,
    verify_bicocycle_conditions,
    verify_cdcc_conditions,
    verify_cdcp_conditions,
    verify_coalgebra,
)
from .report import DEFAULT_MAX_VIOLATIONS, AxiomReport, AxiomResult
from .serialize import (
    BialgebraSplit,
    CdccSplit,
    DefinitionError,
    GroupSplit,
    LieSplit,
    dumps,
    from_document,
    load_document,
    to_document,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_SUM_BOUND = 20

FACTOR_ERRORS = (NotBijective, NotInvertible, SingularMatrix, NotCoalgebraMap, NotAlgebraMap,
                 DimensionMismatch, ShapeMismatch)


class UsageError(Exception):
    pass


def _load(path: str):
    """(raw document, decoded object); raises DefinitionError naming the path."""
    try:
        doc = load_document(path)
    except OSError as exc:
        raise DefinitionError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return doc, from_document(doc)
    except DefinitionError:
        raise
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise DefinitionError(str(exc)) from exc


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# --------------------------------------------------------------------------
# verification


def _normalization_result(d: BicocycleGroupData, cap: int) -> AxiomResult:
    res = AxiomResult("normalization", checked=1, note="unit conditions on the six tables")
    for msg in normalization_violations(d):
        res.record((msg,), None, cap)
    return res


def verify_object(obj, doc: dict, args) -> AxiomReport:
    cap, jobs, literal = args.max_violations, args.jobs, args.literal_axioms
    if isinstance(obj, LieAlgebra):
        return verify_lie_axioms(obj, max_violations=cap, jobs=jobs)
    if isinstance(obj, BicocycleSumData):
        return verify_matched_pair(obj, literal=literal, max_violations=cap, jobs=jobs)
    if isinstance(obj, GradedLieData):
        bound = args.sum_bound if args.sum_bound is not None else doc.get("sum_bound", DEFAULT_SUM_BOUND)
        return graded_verify(obj, bound, literal=literal, max_violations=cap, jobs=jobs)
    if isinstance(obj, FiniteGroup):
        return verify_group_table(obj.cayley, obj.identity, list(obj.elements), max_violations=cap, jobs=jobs)
    if isinstance(obj, BicocycleGroupData):
        report = AxiomReport(kind="group_data")
        report.add(_normalization_result(obj, cap))
        conditions = verify_group_conditions(obj, literal=literal, max_violations=cap, jobs=jobs)
        report.axiom_forms = conditions.axiom_forms
        return report.merge(conditions)
    if isinstance(obj, BialgebraTensor):
        return verify_bialgebra(obj, max_violations=cap)
    if isinstance(obj, CoalgebraTensor):
        return verify_coalgebra(obj, max_violations=cap)
    if isinstance(obj, BicocycleData):
        pre = bicocycle_invariants(obj, max_violations=cap)
        cond = verify_bicocycle_conditions(obj, literal=literal, max_violations=cap)
    elif isinstance(obj, CdcpData):
        pre = cdcp_invariants(obj, max_violations=cap)
        cond = verify_cdcp_conditions(obj, max_violations=cap)
    elif isinstance(obj, CdccData):
        pre = cdcc_invariants(obj, max_violations=cap)
        cond = verify_cdcc_conditions(obj, max_violations=cap)
    else:
        raise UsageError(f"kind {doc['kind']!r} has nothing to verify; splits are inputs of 'factor'")
    pre.kind, pre.axiom_forms = cond.kind, cond.axiom_forms
    return pre.merge(cond)


def report_document(report: AxiomReport, source: str, elapsed: float | None = None) -> dict:
    doc = {"tool": f"bicross {__version__}", "input": source}
    doc.update(report.to_dict())
    for entry in doc["results"]:
        entry["violations"].sort(key=lambda v: v["tuple"])
    if elapsed is not None:
        doc["timing"] = {"seconds": round(elapsed, 3)}
    return doc


def _emit_report(report: AxiomReport, args, source: str, elapsed: float) -> None:
    print(report.summary())
    if args.report:
        doc = report_document(report, source, elapsed if args.timing else None)
        Path(args.report).write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")


def cmd_verify(args) -> int:
    doc, obj = _load(args.path)
    t0 = time.perf_counter()
    try:
        report = verify_object(obj, doc, args)
    except ValueError as exc:  # e.g. a sum bound below the lowest index
        raise UsageError(str(exc)) from exc
    _emit_report(report, args, args.path, time.perf_counter() - t0)
    return EXIT_OK if report.ok else EXIT_FAIL


# --------------------------------------------------------------------------
# building


def build_object(obj, args) -> tuple[object, AxiomReport]:
    """The constructed object and the axiom report of the result."""
    cap, jobs = args.max_violations, args.jobs
    if isinstance(obj, BicocycleSumData):
        L = build_bicocycle_sum(obj)
        return L, verify_lie_axioms(L, max_violations=cap, jobs=jobs)
    if isinstance(obj, BicocycleGroupData):
        try:
            G = build_bicocycle_group(obj, jobs=jobs)
        except NormalizationViolated:
            report = AxiomReport(kind="group_data")
            report.add(_normalization_result(obj, cap))
            return None, report
        except NotAGroup as exc:
            report = exc.report
            if exc.conditions is not None:
                report.merge(exc.conditions)
            return None, report
        return G, verify_group_table(G.cayley, G.identity, list(G.elements), max_violations=cap, jobs=jobs)
    builders: dict[type, Callable] = {
        BicocycleData: build_bicocycle_bialgebra,
        CdcpData: build_cdcp,
        CdccData: build_cdcc,
    }
    for cls, build in builders.items():
        if isinstance(obj, cls):
            B = build(obj)
            return B, verify_bialgebra(B, max_violations=cap)
    raise UsageError("build takes bicocycle_sum_data, group_data, bicocycle_data, cdcp_data or cdcc_data")


def cmd_build(args) -> int:
    _, obj = _load(args.path)
    t0 = time.perf_counter()
    built, report = build_object(obj, args)
    if built is None or not report.ok:
        _emit_report(report, args, args.path, time.perf_counter() - t0)
        return EXIT_FAIL
    _write(dumps(to_document(built)), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# factoring


def factor_object(obj, split):
    if isinstance(obj, LieAlgebra) and isinstance(split, LieSplit):
        return decompose(obj, split.pair(obj))
    if isinstance(obj, LieAlgebra) and isinstance(split, SubspacePair):
        return decompose(obj, split)
    if isinstance(obj, FiniteGroup) and isinstance(split, GroupSplit):
        return factor_group(obj, list(split.M), list(split.H))
    if isinstance(obj, BialgebraTensor) and isinstance(split, BialgebraSplit):
        (M, i), (H, j) = split.M.coalgebra(obj), split.H.coalgebra(obj)
        return factorize_bialgebra(obj, M, H, i, j)
    if isinstance(obj, BialgebraTensor) and isinstance(split, CdccSplit):
        return factorize_cdcc(obj, split.M, split.H, split.q, split.p)
    raise UsageError(
        f"cannot factor {type(obj).__name__} along {type(split).__name__}; expected lie_algebra + lie_split, "
        "finite_group + group_split, bialgebra + bialgebra_split or bialgebra + cdcc_split"
    )


def cmd_factor(args) -> int:
    _, obj = _load(args.object)
    _, split = _load(args.split)
    try:
        data = factor_object(obj, split)
    except FACTOR_ERRORS as exc:
        print(f"factorization failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        if isinstance(exc, DefinitionError):
            raise
        print(f"factorization failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _write(dumps(to_document(data)), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# demos


def _yes(flag: bool) -> str:
    return "yes" if flag else "NO"


def _demo_w1(args) -> bool:
    from .fixtures import w1_graded

    bound = args.sum_bound if args.sum_bound is not None else DEFAULT_SUM_BOUND
    report = graded_verify(w1_graded(), bound, jobs=args.jobs)
    axioms = AxiomReport(kind="graded_lie", axiom_forms=report.axiom_forms)
    for r in report:
        if r.axiom_id != "bracket":
            axioms.add(r)
    n_ok = sum(r.holds for r in axioms)
    print(f"W1 with index sum <= {bound}")
    print(f"{n_ok}/{len(axioms.results)} axioms hold on {axioms.checked} tuples")
    br = report["bracket"]
    print(f"bracket [z_i, z_j] = (j - i) z_(i+j) on {br.checked} pairs: {_yes(br.holds)}")
    return report.ok


def _demo_lie(name: str) -> Callable:
    def run(args) -> bool:
        from .fixtures import LIE_ALGEBRAS, lie_splits
        from .lie import adapted_algebra

        L = LIE_ALGEBRAS[name]()
        ok = True
        for pair in lie_splits(name):
            d = decompose(L, pair)
            report = verify_matched_pair(d, jobs=args.jobs)
            equal = build_bicocycle_sum(d) == adapted_algebra(L, pair)
            print(f"{name} = span{{{','.join(pair.m_labels)}}} + span{{{','.join(pair.h_labels)}}}: "
                  f"{report.summary().splitlines()[0]}; round trip equal: {_yes(equal)}")
            ok &= report.ok and equal
        return ok
    return run


def _demo_group(name: str, M, H) -> Callable:
    def run(args) -> bool:
        from .fixtures import GROUPS
        from .group import transported_table

        G = GROUPS[name]()
        d = factor_group(G, M, H)
        report = verify_group_conditions(d, jobs=args.jobs)
        built = build_bicocycle_group(d, jobs=args.jobs)
        equal = np.array_equal(built.cayley, transported_table(G, M, H))
        print(f"{name} = {{{', '.join(M)}}} . {{{', '.join(H)}}}")
        print(report.summary().splitlines()[0])
        print(f"rebuilt Cayley table equals the original: {_yes(equal)}")
        return report.ok and equal
    return run


def _demo_kz4(args) -> bool:
    from .fixtures import kz4_split

    G, f = kz4_split()
    report = verify_bicocycle_conditions(f.data)
    pre = bicocycle_invariants(f.data)
    built = build_bicocycle_bialgebra(f.data)
    equal = built.same_tensors(pullback_bialgebra(G, f.iso, built.space))
    print("k[Z4] = span{g0,g2} . span{g0,g1}")
    print(report.summary().splitlines()[0])
    print(f"standing normalizations: {_yes(pre.ok)}")
    print(f"multiplication and comultiplication tensors equal: {_yes(equal)}")
    return report.ok and pre.ok and equal


def _demo_kz4_dual(args) -> bool:
    from .fixtures import kz4_cdcp
    from .quantum import cdcc_from_cdcp, dualize

    d = kz4_cdcp()
    L = dualize(build_cdcp(d))
    f = cdcc_from_cdcp(d, return_iso=True)
    report = verify_cdcc_conditions(f.data)
    built = build_cdcc(f.data)
    equal = built.same_tensors(pullback_bialgebra(L, f.iso, built.space))
    print("dual of k[Z4] along the projections dual to span{g0,g1} and k[<g2>]")
    print(report.summary().splitlines()[0])
    print(f"tensors equal: {_yes(equal)}")
    return report.ok and equal


def _demo_h4z4(args) -> bool:
    from .fixtures import h4z4_splits

    ok = True
    for k, (G, f) in enumerate(h4z4_splits()):
        report = verify_bicocycle_conditions(f.data)
        built = build_bicocycle_bialgebra(f.data)
        equal = built.same_tensors(pullback_bialgebra(G, f.iso, built.space))
        print(f"split {k}: {report.summary().splitlines()[0]}; tensors equal: {_yes(equal)}")
        ok &= report.ok and equal
    return ok


DEMOS: dict[str, tuple[Callable, str]] = {
    "w1": (_demo_w1, "W1 graded maps: all axioms up to the sum bound"),
    "sl2": (_demo_lie("sl2"), "sl2: decompose, verify, rebuild"),
    "heisenberg3": (_demo_lie("heisenberg3"), "Heisenberg algebra: decompose, verify, rebuild"),
    "z4": (_demo_group("Z4", ["0", "2"], ["0", "1"]), "Z4 over {0,2} and {0,1}"),
    "s3": (_demo_group("S3", ["e", "(123)", "(132)"], ["e", "(12)"]), "S3 as a matched pair"),
    "q8": (_demo_group("Q8", ["1", "-1", "i", "-i"], ["1", "j"]), "Q8 over <i> and {1, j}"),
    "kz4": (_demo_kz4, "k[Z4]: factorize, verify B1-B14, rebuild"),
    "kz4-dual": (_demo_kz4_dual, "dual of k[Z4]: factorize, verify D1-D11, rebuild"),
    "h4z4": (_demo_h4z4, "H4 (x) k[Z4]: two non-cocommutative splits"),
}


def cmd_demo(args) -> int:
    if args.name not in DEMOS:
        raise UsageError(f"unknown demo {args.name!r}; choose from {', '.join(DEMOS)}")
    run, _ = DEMOS[args.name]
    ok = run(args)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# export


def cmd_export(args) -> int:
    from .fixtures import CATALOG

    if args.list:
        for name, entry in CATALOG.items():
            print(f"{name:16} {entry.kind:20} {entry.description}")
        return EXIT_OK
    if args.name not in CATALOG:
        raise UsageError(f"unknown fixture {args.name!r}; see 'bicross export --list'")
    _write(dumps(to_document(CATALOG[args.name].make())), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the Lie and group sweeps")
    p.add_argument("--max-violations", type=int, default=DEFAULT_MAX_VIOLATIONS, help="violations kept per axiom")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicross", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"bicross {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check every axiom of a definition file")
    p.add_argument("path")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--sum-bound", type=int, help=f"index-sum bound for graded input (default {DEFAULT_SUM_BOUND})")
    p.add_argument("--literal-axioms", action="store_true", help="also evaluate the literal printed forms")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("build", help="construct the object defined by a map-data file")
    p.add_argument("path")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--report", help="write the JSON report here when the result fails")
    p.add_argument("--timing", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("factor", help="recover the six maps of an object along a split")
    p.add_argument("object")
    p.add_argument("split")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("demo", help="run a named example end to end")
    p.add_argument("name", help=", ".join(DEMOS))
    p.add_argument("--sum-bound", type=int)
    _common(p)
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("export", help="write a built-in fixture as a definition file")
    p.add_argument("name", nargs="?")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--list", action="store_true", help="list the available fixtures")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("bicross: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "export" and not args.list and not args.name:
        print("bicross export: give a fixture name or --list", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except DefinitionError as exc:
        print(f"bicross: invalid definition: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"bicross: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
