"""Equivalence harnesses.

Each harness evaluates every side of an equivalence independently, from
scratch, and reports whether the verdicts coincide.  A disagreement is never
resolved silently: the reports say which side failed and on which identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import (
    AlgebraBundle,
    BialgebraBundle,
    MatchedPairBundle,
    Report,
    RepresentationBundle,
)
from .checks import (
    WeightMismatch,
    check_adjoint_admissible,
    check_bialgebra_cocycle,
    check_bihom_coalgebra,
    check_bihom_lie,
    check_diff_coalgebra,
    check_diff_dual_admissible,
    check_diff_leibniz,
    check_diff_pi,
    check_diff_rep,
    check_dual_admissible,
    check_form,
    check_matched_pair,
    check_nijenhuis_coalgebra,
    check_nijenhuis_operator,
    check_nijenhuis_representation,
    check_representation,
    is_involutive,
)
from .constructions import (
    DoubleBundle,
    PreconditionFailed,
    adjoint_map_wrt_form,
    bicrossed_product,
    coadjoint_matched_pair,
    double_construction,
    dual_representation,
    dualize,
    semidirect_product,
)
from .exact import DimensionMismatch, block_diag
from .bundles import Residual, entry


@dataclass(frozen=True)
class TriadReport:
    """Verdicts of the three equivalent descriptions plus their agreement."""

    manin_ok: bool
    manin_report: Report
    bialgebra_ok: bool
    bialgebra_report: Report
    matched_pair_ok: bool
    matched_pair_report: Report
    notes: tuple[str, ...] = ()

    @property
    def agree(self) -> bool:
        return self.manin_ok == self.bialgebra_ok == self.matched_pair_ok

    @property
    def all_ok(self) -> bool:
        return self.manin_ok and self.bialgebra_ok and self.matched_pair_ok


@dataclass(frozen=True)
class IffReport:
    """Two independently computed verdicts of one stated equivalence."""

    kind: str
    first_label: str
    first_ok: bool
    first_report: Report
    second_label: str
    second_ok: bool
    second_report: Report

    @property
    def agree(self) -> bool:
        return self.first_ok == self.second_ok


def _require_coherent_dual(left: AlgebraBundle, right: AlgebraBundle) -> None:
    if left.dim != right.dim:
        raise DimensionMismatch("triad inputs must have equal dimensions")
    if right.alpha != left.alpha.transpose() or right.beta != left.beta.transpose():
        raise PreconditionFailed("the dual-side structure maps must be the transposes of the base maps")


def _involution_notes(left: AlgebraBundle, right: AlgebraBundle) -> tuple[str, ...]:
    notes = []
    if not is_involutive(left):
        notes.append("hypothesis not met: base algebra is not involutive")
    if not is_involutive(right):
        notes.append("hypothesis not met: dual-side algebra is not involutive")
    return tuple(notes)


def triad_nijenhuis_bihom(left: AlgebraBundle, right: AlgebraBundle) -> TriadReport:
    """Double suite vs bialgebra conditions vs coadjoint matched pair."""
    _require_coherent_dual(left, right)
    N = left.require_nijenhuis()
    S_mat = right.require_nijenhuis().transpose()

    # (i) the double and its form
    double, restrict = double_construction(left, right, "nijenhuis")
    manin = Report(()).merged(
        check_bihom_lie(left).prefixed("left"),
        check_nijenhuis_operator(left).prefixed("left"),
        check_bihom_lie(right).prefixed("right"),
        check_nijenhuis_operator(right).prefixed("right"),
        restrict,
        check_bihom_lie(double.total).prefixed("double"),
        check_nijenhuis_operator(double.total).prefixed("double"),
        check_form(double.total, double.form).prefixed("double"),
    )

    # (ii) the bialgebra conditions on the base space
    coalg = dualize(right)
    bial = Report(()).merged(
        check_bihom_lie(left),
        check_bihom_coalgebra(coalg),
        check_bialgebra_cocycle(BialgebraBundle(left, coalg)),
        check_nijenhuis_operator(left),
        check_nijenhuis_coalgebra(coalg),
        check_adjoint_admissible(left, S_mat),
        check_dual_admissible(coalg.comul, N, S_mat),
    )

    # (iii) the coadjoint matched pair
    mp = coadjoint_matched_pair(left, right)
    mp_report = check_matched_pair(mp, "nijenhuis")

    return TriadReport(manin.ok, manin, bial.ok, bial, mp_report.ok, mp_report,
                       _involution_notes(left, right))


def triad_differential(left: AlgebraBundle, right: AlgebraBundle, symmetrized: bool = True) -> TriadReport:
    """The same three-way comparison in the differential setting."""
    _require_coherent_dual(left, right)
    dl = left.require_differential()
    dr = right.require_differential()
    if dl.weight != dr.weight:
        raise WeightMismatch(f"weights differ: {dl.weight} vs {dr.weight}")

    double, restrict = double_construction(left, right, "differential")
    manin = Report(()).merged(
        check_bihom_lie(left).prefixed("left"),
        check_diff_leibniz(left).prefixed("left"),
        check_bihom_lie(right).prefixed("right"),
        check_diff_leibniz(right).prefixed("right"),
        restrict,
        check_bihom_lie(double.total).prefixed("double"),
        check_diff_leibniz(double.total).prefixed("double"),
        check_form(double.total, double.form).prefixed("double"),
    )

    coalg = dualize(right)
    bial = Report(()).merged(
        check_bihom_lie(left),
        check_bihom_coalgebra(coalg),
        check_bialgebra_cocycle(BialgebraBundle(left, coalg)),
        check_diff_leibniz(left),
        check_diff_coalgebra(coalg),
        check_diff_pi(left, coalg.codiff.matrix),
        check_diff_dual_admissible(coalg, dl.matrix),
    )

    mp = coadjoint_matched_pair(left, right)
    mp_report = check_matched_pair(mp, "differential", symmetrized)

    return TriadReport(manin.ok, manin, bial.ok, bial, mp_report.ok, mp_report)


def double_adjoint_report(double: DoubleBundle) -> Report:
    """Block identity for the form-adjoint of the combined operator, plus the
    two factor admissibility conditions it implies."""
    left, right = double.left, double.right
    N = left.require_nijenhuis()
    S_star = right.require_nijenhuis()
    combined = double.total.require_nijenhuis()
    adj = adjoint_map_wrt_form(combined, double.form)
    expected = block_diag(S_star.transpose(), N.transpose())
    rep = Report((entry("admissible_adjoint", "form-adjoint-blocks", Residual.from_matrix(adj.sub(expected))),))
    return rep.merged(
        check_adjoint_admissible(left, S_star.transpose()).prefixed("left-factor"),
        check_adjoint_admissible(right, N.transpose()).prefixed("right-factor"),
    )


def iff_harness(kind: str, **data) -> IffReport:
    """Evaluate both sides of a named equivalence independently.

    kinds: dual_algebra, dual_nijenhuis, dual_differential, dual_rep,
    semidirect, semidirect_diff, bicrossed, bicrossed_diff.
    """
    if kind == "dual_algebra":
        algebra: AlgebraBundle = data["algebra"]
        first = check_bihom_lie(algebra)
        second = check_bihom_coalgebra(dualize(algebra))
        return IffReport(kind, "algebra axioms", first.ok, first,
                         "dual coalgebra axioms", second.ok, second)
    if kind == "dual_nijenhuis":
        algebra = data["algebra"]
        first = check_bihom_lie(algebra).merged(check_nijenhuis_operator(algebra))
        co = dualize(algebra)
        second = check_bihom_coalgebra(co).merged(check_nijenhuis_coalgebra(co))
        return IffReport(kind, "operator algebra axioms", first.ok, first,
                         "dual operator coalgebra axioms", second.ok, second)
    if kind == "dual_differential":
        algebra = data["algebra"]
        first = check_bihom_lie(algebra).merged(check_diff_leibniz(algebra))
        co = dualize(algebra)
        second = check_bihom_coalgebra(co).merged(check_diff_coalgebra(co))
        return IffReport(kind, "differential algebra axioms", first.ok, first,
                         "dual differential coalgebra axioms", second.ok, second)
    if kind == "dual_rep":
        rep: RepresentationBundle = data["rep"]
        first = check_representation(rep)
        second = check_representation(dual_representation(rep))
        notes = () if is_involutive(rep.algebra) else ("hypothesis not met: algebra is not involutive",)
        return IffReport(kind, "module axioms", first.ok, Report(first.entries, first.notes + notes),
                         "dual module axioms", second.ok, second)
    if kind == "semidirect":
        algebra, rep = data["algebra"], data["rep"]
        first = check_representation(rep).merged(check_nijenhuis_representation(rep))
        product, _ = semidirect_product(algebra, rep, "nijenhuis")
        second = check_bihom_lie(product).merged(check_nijenhuis_operator(product))
        return IffReport(kind, "module axioms", first.ok, first,
                         "semidirect product suite", second.ok, second)
    if kind == "semidirect_diff":
        algebra, rep = data["algebra"], data["rep"]
        first = check_representation(rep).merged(check_diff_rep(rep))
        product, _ = semidirect_product(algebra, rep, "differential")
        second = check_bihom_lie(product).merged(check_diff_leibniz(product))
        return IffReport(kind, "module axioms", first.ok, first,
                         "semidirect product suite", second.ok, second)
    if kind == "bicrossed":
        mp: MatchedPairBundle = data["mp"]
        first = check_matched_pair(mp, "nijenhuis")
        product, _ = bicrossed_product(mp, "nijenhuis")
        second = check_bihom_lie(product).merged(check_nijenhuis_operator(product))
        return IffReport(kind, "matched pair axioms", first.ok, first,
                         "bicrossed product suite", second.ok, second)
    if kind == "bicrossed_diff":
        mp = data["mp"]
        first = check_matched_pair(mp, "differential", data.get("symmetrized", True))
        product, _ = bicrossed_product(mp, "differential")
        second = check_bihom_lie(product).merged(check_diff_leibniz(product))
        return IffReport(kind, "matched pair axioms", first.ok, first,
                         "bicrossed product suite", second.ok, second)
    raise ValueError(f"unknown equivalence kind {kind!r}")
