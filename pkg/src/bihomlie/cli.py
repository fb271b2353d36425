"""Command-line front end.

Subcommands: check (run identity suites on bundle files), construct (run a
construction and write its output), triad (three-way equivalence harness),
search (structure-finding solvers).  Reports are JSON documents rendered
deterministically: repeated runs on the same inputs are byte-identical.

Exit codes: 0 all pass; 1 identity failure; 2 parse/precondition error;
3 (triad only) the alarming case of a three-way disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import bundles, checks, constructions, equivalence, search
from .bundles import (
    AlgebraBundle,
    BialgebraBundle,
    CoalgebraBundle,
    FormBundle,
    MatchedPairBundle,
    MissingField,
    ParseError,
    Report,
    RepresentationBundle,
    fixture_by_name,
)
from .checks import IDENTITY_FORMULAS, WeightMismatch
from .constructions import PreconditionFailed
from .exact import DimensionMismatch, Matrix, SingularMatrix, format_scalar, scalar
from .search import BudgetExceeded, NonlinearKind

MAX_RESIDUAL_CELLS = 16

_USER_ERRORS = (
    ParseError,
    MissingField,
    DimensionMismatch,
    SingularMatrix,
    PreconditionFailed,
    NonlinearKind,
    BudgetExceeded,
    WeightMismatch,
    ValueError,
    OSError,
)


def _load_source(ref: str) -> Any:
    if ref.startswith("fixture:"):
        return fixture_by_name(ref[len("fixture:"):])
    return bundles.load_path(ref)


def _residual_document(res: bundles.Residual) -> dict[str, Any]:
    cells = [{"index": list(idx), "value": format_scalar(v)} for idx, v in res.nonzeros[:MAX_RESIDUAL_CELLS]]
    doc: dict[str, Any] = {"shape": list(res.shape), "nonzero_count": len(res.nonzeros), "nonzeros": cells}
    if len(res.nonzeros) > MAX_RESIDUAL_CELLS:
        doc["truncated"] = True
    return doc


def _report_document(source: str, report: Report) -> dict[str, Any]:
    return {
        "kind": "report",
        "source": source,
        "ok": report.ok,
        "notes": list(report.notes),
        "entries": [
            {
                "identity": e.identity,
                "case": e.case,
                "ok": e.ok,
                "advisory": e.advisory,
                "residual": _residual_document(e.residual),
            }
            for e in report.entries
        ],
    }


def _identity_table(reports: list[dict[str, Any]]) -> dict[str, str]:
    used = sorted({e["identity"] for r in reports for e in r.get("entries", [])})
    return {name: IDENTITY_FORMULAS.get(name, "") for name in used}


def _emit(doc: dict[str, Any], out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_report_lines(source: str, report: Report) -> None:
    for e in report.entries:
        tag = "PASS" if e.ok else "FAIL"
        if e.advisory:
            tag += "*"
        case = f"[{e.case}]" if e.case else ""
        print(f"{tag} {source}: {e.identity}{case}")
    for note in report.notes:
        print(f"NOTE {source}: {note}")


# -- check ------------------------------------------------------------------------


def _suite_report(bundle: Any, suite: str, weight: Fraction | None,
                  flavor: str | None, symmetrized: bool, against: Any | None) -> Report:
    if isinstance(bundle, AlgebraBundle):
        if suite in ("auto",):
            return checks.full_algebra_suite(bundle)
        if suite in ("lie", "bihom"):
            return checks.check_bihom_lie(bundle)
        if suite == "nijenhuis":
            return checks.check_bihom_lie(bundle).merged(checks.check_nijenhuis_operator(bundle))
        if suite == "differential":
            return checks.check_bihom_lie(bundle).merged(checks.check_diff_leibniz(bundle, weight=weight))
        if suite == "involution":
            return checks.check_involution(bundle)
        raise ParseError(f"suite {suite!r} does not apply to an algebra bundle")
    if isinstance(bundle, CoalgebraBundle):
        if suite == "auto":
            return checks.full_coalgebra_suite(bundle)
        if suite in ("lie", "bihom", "coalgebra"):
            return checks.check_bihom_coalgebra(bundle)
        if suite == "nijenhuis":
            return checks.check_bihom_coalgebra(bundle).merged(checks.check_nijenhuis_coalgebra(bundle))
        if suite == "differential":
            return checks.check_bihom_coalgebra(bundle).merged(checks.check_diff_coalgebra(bundle, weight=weight))
        raise ParseError(f"suite {suite!r} does not apply to a coalgebra bundle")
    if isinstance(bundle, BialgebraBundle):
        rep = checks.full_algebra_suite(bundle.algebra).merged(
            checks.full_coalgebra_suite(bundle.coalgebra),
            checks.check_bialgebra_cocycle(bundle),
        )
        alg, co = bundle.algebra, bundle.coalgebra
        if alg.nijenhuis is not None and co.conijenhuis is not None:
            rep = rep.merged(
                checks.check_adjoint_admissible(alg, co.conijenhuis),
                checks.check_dual_admissible(co.comul, alg.nijenhuis, co.conijenhuis),
            )
        if alg.differential is not None and co.codiff is not None:
            rep = rep.merged(
                checks.check_diff_pi(alg, co.codiff.matrix),
                checks.check_diff_dual_admissible(co, alg.differential.matrix),
            )
        return rep
    if isinstance(bundle, RepresentationBundle):
        rep = checks.check_representation(bundle)
        if suite in ("auto", "nijenhuis") and bundle.eta is not None and bundle.algebra.nijenhuis is not None:
            rep = rep.merged(checks.check_nijenhuis_representation(bundle))
        if suite in ("auto", "differential") and bundle.xi is not None and bundle.algebra.differential is not None:
            rep = rep.merged(checks.check_diff_rep(bundle, weight=weight))
        return rep
    if isinstance(bundle, MatchedPairBundle):
        mp_flavor = flavor or ("nijenhuis" if bundle.left.nijenhuis is not None and bundle.right.nijenhuis is not None
                               else "differential" if bundle.left.differential is not None and bundle.right.differential is not None
                               else "bihom")
        return checks.check_matched_pair(bundle, mp_flavor, symmetrized)
    if isinstance(bundle, FormBundle):
        if against is not None:
            return checks.check_form(against, bundle)
        g = bundle.gram
        from .bundles import Residual, entry
        from .exact import nullspace
        kernel = nullspace(g)
        return Report((
            entry("form_symmetric", "", Residual.from_matrix(g.sub(g.transpose()))),
            entry("form_nondegenerate", "", Residual.collect(
                (bundle.dim, len(kernel)),
                (((i, j), kernel[j][i]) for j in range(len(kernel)) for i in range(bundle.dim)))),
        ))
    raise ParseError(f"cannot check a {type(bundle).__name__}")


def cmd_check(args: argparse.Namespace) -> int:
    against = _load_source(args.against) if args.against else None
    weight = scalar(args.weight) if args.weight is not None else None
    reports: list[dict[str, Any]] = []
    ok = True
    for ref in args.files:
        bundle = _load_source(ref)
        report = _suite_report(bundle, args.suite, weight, args.flavor, args.symmetrized_mp_right, against)
        _print_report_lines(ref, report)
        reports.append(_report_document(ref, report))
        ok = ok and report.ok
    doc = {"kind": "report-set", "ok": ok, "identities": _identity_table(reports), "reports": reports}
    if args.out:
        _emit(doc, args.out)
    print("OK" if ok else "IDENTITY FAILURE")
    return 0 if ok else 1


# -- construct -----------------------------------------------------------------------


def _load_maps(path: str, dim: int) -> tuple[Matrix, Matrix]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in maps file at line {exc.lineno}: {exc.msg}") from exc
    try:
        alpha = Matrix.from_rows(doc["alpha"])
    except KeyError as exc:
        raise ParseError("maps file needs an 'alpha' matrix") from exc
    beta = Matrix.from_rows(doc["beta"]) if "beta" in doc else Matrix.identity(dim)
    return alpha, beta


def _matrix_document(m: Matrix) -> dict[str, Any]:
    return {"kind": "matrix", "dim": m.rows, "matrix": [[format_scalar(x) for x in row] for row in m.entries]}


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.construction
    inputs = [_load_source(ref) for ref in args.inputs]
    report = Report(())
    result: Any = None
    extra_out: list[tuple[str, dict[str, Any]]] = []

    if kind == "dual":
        (bundle,) = inputs
        result = constructions.dualize(bundle)
    elif kind == "twist":
        (bundle,) = inputs
        if not args.maps:
            raise ParseError("twist needs --maps pointing to an alpha/beta file")
        alpha, beta = _load_maps(args.maps, bundle.dim)
        result, report = constructions.yau_twist(bundle, alpha, beta)
    elif kind == "untwist":
        (bundle,) = inputs
        result = constructions.untwist(bundle)
    elif kind == "hom":
        (bundle,) = inputs
        if not args.maps:
            raise ParseError("hom needs --maps pointing to an alpha file")
        alpha, _ = _load_maps(args.maps, bundle.dim)
        result, report = constructions.hom_specialize(bundle, alpha)
    elif kind == "semidirect":
        (rep_bundle,) = inputs
        if not isinstance(rep_bundle, RepresentationBundle):
            raise ParseError("semidirect needs a representation bundle")
        result, report = constructions.semidirect_product(rep_bundle.algebra, rep_bundle, args.flavor or "nijenhuis")
    elif kind == "double":
        left, right = inputs
        double, report = constructions.double_construction(left, right, args.flavor or "nijenhuis")
        result = double.total
        extra_out.append(("form", bundles.document(double.form)))
    elif kind == "bicrossed":
        (mp,) = inputs
        if not isinstance(mp, MatchedPairBundle):
            raise ParseError("bicrossed needs a matched_pair bundle")
        result, report = constructions.bicrossed_product(mp, args.flavor or "nijenhuis", args.symmetrized_mp_right)
    elif kind == "adjoint-form":
        algebra, form = inputs
        result_matrix = constructions.adjoint_map_wrt_form(algebra.require_nijenhuis(), form)
        result = None
        extra_out.append(("matrix", _matrix_document(result_matrix)))
    else:
        raise ParseError(f"unknown construction {kind!r}")

    docs: list[dict[str, Any]] = []
    if result is not None:
        docs.append(bundles.document(result))
    docs.extend(doc for _, doc in extra_out)
    rep_doc = _report_document("hypotheses", report)
    out_doc = {"kind": "construction", "construction": kind, "ok": report.ok,
               "identities": _identity_table([rep_doc]), "report": rep_doc, "outputs": docs}
    if args.out:
        if result is not None:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(docs[0], indent=2) + "\n")
            for label, doc in extra_out:
                with open(f"{args.out}.{label}.json", "w", encoding="utf-8") as fh:
                    fh.write(json.dumps(doc, indent=2) + "\n")
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(extra_out[0][1], indent=2) + "\n")
        with open(f"{args.out}.report.json", "w", encoding="utf-8") as fh:
            fh.write(json.dumps(out_doc, indent=2) + "\n")
    else:
        _emit(out_doc, None)
    _print_report_lines("hypotheses", report)
    if not report.ok:
        print("PRECONDITION FAILURE")
        return 2
    print("OK")
    return 0


# -- triad ---------------------------------------------------------------------------


def cmd_triad(args: argparse.Namespace) -> int:
    left = _load_source(args.left)
    right = _load_source(args.right)
    if args.flavor == "differential":
        triad = equivalence.triad_differential(left, right, args.symmetrized_mp_right)
    else:
        triad = equivalence.triad_nijenhuis_bihom(left, right)
    side_docs = {
        "manin": _report_document("manin", triad.manin_report),
        "bialgebra": _report_document("bialgebra", triad.bialgebra_report),
        "matched_pair": _report_document("matched_pair", triad.matched_pair_report),
    }
    doc = {
        "kind": "triad-report",
        "flavor": args.flavor,
        "verdicts": {
            "manin": triad.manin_ok,
            "bialgebra": triad.bialgebra_ok,
            "matched_pair": triad.matched_pair_ok,
        },
        "agree": triad.agree,
        "all_ok": triad.all_ok,
        "notes": list(triad.notes),
        "identities": _identity_table(list(side_docs.values())),
        "reports": side_docs,
    }
    if args.out:
        _emit(doc, args.out)
    print(f"manin={triad.manin_ok} bialgebra={triad.bialgebra_ok} matched_pair={triad.matched_pair_ok} agree={triad.agree}")
    if not triad.agree:
        print("DISAGREEMENT")
        return 3
    if not triad.all_ok:
        print("AGREE BUT FALSE")
        return 1
    print("OK")
    return 0


# -- search --------------------------------------------------------------------------


def _solution_document(mode: str, sol: search.SolutionSpace) -> dict[str, Any]:
    def fmt(m: Matrix | None):
        return None if m is None else [[format_scalar(x) for x in row] for row in m.entries]

    return {
        "kind": "solutions",
        "mode": mode,
        "shape": list(sol.shape),
        "homogeneous": sol.homogeneous,
        "empty": sol.is_empty,
        "dimension": sol.dimension,
        "particular": fmt(sol.particular_matrix()),
        "basis": [fmt(m) for m in sol.basis_matrices()],
    }


def cmd_search(args: argparse.Namespace) -> int:
    bundle = _load_source(args.file)
    weight = scalar(args.weight) if args.weight is not None else scalar(0)
    mode = args.mode
    if mode == "nijenhuis-grid":
        if not args.grid:
            raise ParseError("nijenhuis-grid needs --grid \"a,b,c\"")
        grid = [scalar(x) for x in args.grid.split(",")]
        pattern = None
        if args.pattern:
            with open(args.pattern, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
            pattern = [[None if x is None else scalar(x) for x in row] for row in raw]
        sols = search.grid_search_nijenhuis(bundle, grid, pattern, args.budget)
        doc = {
            "kind": "solutions",
            "mode": mode,
            "count": len(sols),
            "solutions": [[[format_scalar(x) for x in row] for row in m.entries] for m in sols],
        }
        _emit(doc, args.out)
        print(f"{len(sols)} solutions")
        return 0
    if mode == "derivations":
        sol = search.solve_linear_identity("derivation", weight, algebra=bundle)
    elif mode == "conijenhuis":
        if not isinstance(bundle, BialgebraBundle):
            raise ParseError("conijenhuis search needs a bialgebra file carrying comul and nijenhuis")
        sol = search.solve_linear_identity("conijenhuis", weight,
                                           comul=bundle.coalgebra.comul, nmap=bundle.algebra.require_nijenhuis())
    elif mode == "pi":
        sol = search.solve_linear_identity("pi", weight if args.weight is not None else bundle.require_differential().weight,
                                           algebra=bundle)
    elif mode == "zeta":
        if not isinstance(bundle, RepresentationBundle):
            raise ParseError("zeta search needs a representation file")
        w = weight if args.weight is not None else bundle.algebra.require_differential().weight
        sol = search.solve_linear_identity("zeta", w, rep=bundle)
    else:
        raise ParseError(f"unknown search mode {mode!r}")
    _emit(_solution_document(mode, sol), args.out)
    print(f"solution space dimension {sol.dimension}" + (" (inconsistent)" if sol.is_empty else ""))
    return 0


# -- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bihomlie",
                                     description="exact checks, constructions and searches for twisted Lie structures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run identity suites on bundle files")
    p.add_argument("files", nargs="+", help="bundle files or fixture:NAME references")
    p.add_argument("--suite", default="auto",
                   choices=["auto", "lie", "bihom", "nijenhuis", "coalgebra", "bialgebra",
                            "representation", "form", "differential", "involution"])
    p.add_argument("--flavor", choices=["bihom", "nijenhuis", "differential", "lie"], default=None)
    p.add_argument("--weight", default=None, help="rational weight p/q override")
    p.add_argument("--against", default=None, help="algebra file a form file is checked against")
    p.add_argument("--symmetrized-mp-right", action=argparse.BooleanOptionalAction, default=True,
                   help="which reading of the second matched-pair identity counts toward the verdict")
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="run a construction and write its output bundle")
    p.add_argument("construction",
                   choices=["dual", "twist", "untwist", "hom", "semidirect", "double", "bicrossed", "adjoint-form"])
    p.add_argument("inputs", nargs="+", help="input bundle files or fixture:NAME references")
    p.add_argument("--flavor", choices=["bihom", "nijenhuis", "differential", "lie"], default=None)
    p.add_argument("--maps", default=None, help="JSON file with alpha (and beta) matrices for twists")
    p.add_argument("--symmetrized-mp-right", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--out", default=None, help="write the constructed bundle here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("triad", help="three-way equivalence harness")
    p.add_argument("left", help="base algebra bundle")
    p.add_argument("right", help="algebra bundle on the dual space")
    p.add_argument("--flavor", choices=["nijenhuis", "differential"], default="nijenhuis")
    p.add_argument("--symmetrized-mp-right", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_triad)

    p = sub.add_parser("search", help="structure-finding solvers")
    p.add_argument("file", help="input bundle file or fixture:NAME")
    p.add_argument("--mode", required=True,
                   choices=["derivations", "conijenhuis", "pi", "zeta", "nijenhuis-grid"])
    p.add_argument("--weight", default=None, help="rational weight p/q")
    p.add_argument("--grid", default=None, help="comma-separated rational grid values")
    p.add_argument("--pattern", default=None, help="JSON file fixing matrix entries (null = free)")
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
