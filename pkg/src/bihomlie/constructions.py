"""Constructive maps between bundles: duals, twists, semidirect products,
coadjoint doubles, bicrossed products, and adjoint maps of forms.

Constructions never silently validate: the ones with stated hypotheses return
their bundle together with the Report of those hypotheses.  Sign convention
for coadjoint actions: both actions use the representation convention
< rho*(u) w, v > = - < w, rho(u) v >; the variant with the plus sign (which
fails to be a representation on non-abelian inputs) stays available through
the ``convention`` argument for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .bundles import (
    AlgebraBundle,
    BialgebraBundle,
    CoalgebraBundle,
    Differential,
    FormBundle,
    MatchedPairBundle,
    Report,
    RepresentationBundle,
    Residual,
    entry,
)
from .checks import WeightMismatch, check_matched_pair, check_representation, check_nijenhuis_representation
from .exact import (
    DimensionMismatch,
    Matrix,
    Tensor3,
    Vector,
    ZERO,
    apply_bilinear,
    block_diag,
    invert,
)


class PreconditionFailed(ValueError):
    """A construction's stated hypothesis fails; carries the failing report."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class DoubleBundle:
    """An algebra on L + L* with the canonical pairing form and provenance."""

    total: AlgebraBundle
    form: FormBundle
    left: AlgebraBundle
    right: AlgebraBundle


# -- duals ---------------------------------------------------------------------


def dualize(x: AlgebraBundle | CoalgebraBundle) -> CoalgebraBundle | AlgebraBundle:
    """Transpose a structure across the canonical pairing.

    An algebra bundle read on the dual space becomes the coalgebra it is the
    dual of, and conversely; structure constants move by pure index
    transposition and every map becomes its dual-basis transpose.  Involution:
    dualize(dualize(x)) == x.
    """
    if isinstance(x, AlgebraBundle):
        n = x.dim
        cells = [[[x.bracket.entries[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
        codiff = Differential(x.differential.matrix.transpose(), x.differential.weight) if x.differential else None
        return CoalgebraBundle(
            n,
            Tensor3.from_entries(cells),
            x.alpha.transpose(),
            x.beta.transpose(),
            conijenhuis=x.nijenhuis.transpose() if x.nijenhuis is not None else None,
            codiff=codiff,
        )
    if isinstance(x, CoalgebraBundle):
        n = x.dim
        cells = [[[x.comul.entries[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
        alpha = x.alpha.transpose()
        beta = x.beta.transpose()
        diff = Differential(x.codiff.matrix.transpose(), x.codiff.weight) if x.codiff else None
        ident = Matrix.identity(n)
        kind = "lie" if alpha == ident and beta == ident else "bihom-lie"
        return AlgebraBundle(
            n,
            Tensor3.from_entries(cells),
            alpha,
            beta,
            nijenhuis=x.conijenhuis.transpose() if x.conijenhuis is not None else None,
            differential=diff,
            kind=kind,
        )
    raise TypeError(f"cannot dualize {type(x).__name__}")


def dual_representation(r: RepresentationBundle) -> RepresentationBundle:
    """Module structure on the dual space: actions negated-transposed, the
    auxiliary maps transposed."""
    return RepresentationBundle(
        r.algebra,
        r.vdim,
        tuple(m.transpose().neg() for m in r.rho),
        r.p.transpose(),
        r.q.transpose(),
        eta=r.eta.transpose() if r.eta is not None else None,
        xi=r.xi.transpose() if r.xi is not None else None,
    )


def coadjoint_rep(a: AlgebraBundle) -> tuple[Matrix, ...]:
    """Action of the algebra on its dual space: x acts by minus the transpose
    of ad_x, so < x . w, v > = - < w, [x, v] >."""
    n = a.dim
    out = []
    for i in range(n):
        ad = Matrix.from_columns([a.bracket_basis(i, k) for k in range(n)])
        out.append(ad.transpose().neg())
    return tuple(out)


def dual_action_on_primal(dual_algebra: AlgebraBundle, convention: str = "representation") -> tuple[Matrix, ...]:
    """Action of an algebra living on the dual space back on the primal space.

    With the default representation convention the pairing identity reads
    < f . x, g > = - < x, [f, g] >.  convention="plus" keeps the opposite
    sign; it satisfies < f . x, g > = < x, [f, g] > but is only an
    anti-representation and breaks the double bracket on non-abelian inputs.
    """
    n = dual_algebra.dim
    sign = -1 if convention == "representation" else 1
    if convention not in ("representation", "plus"):
        raise ValueError(f"unknown convention {convention!r}")
    out = []
    for i in range(n):
        # entry [k][j] of the action of the i-th dual basis vector
        rows = [[sign * dual_algebra.bracket.entries[i][k][j] for j in range(n)] for k in range(n)]
        out.append(Matrix.from_rows(rows))
    return tuple(out)


def coadjoint_action(a: AlgebraBundle, dual_algebra: AlgebraBundle | None = None,
                     convention: str = "representation") -> tuple[tuple[Matrix, ...], tuple[Matrix, ...]]:
    """Both coadjoint actions for a base algebra and an algebra on its dual.

    Returns (action of a on the dual space, action of the dual algebra on the
    primal space); a missing dual algebra means the abelian one.
    """
    if dual_algebra is None:
        dual_algebra = replace(a, bracket=Tensor3.zeros((a.dim, a.dim, a.dim)),
                               alpha=a.alpha.transpose(), beta=a.beta.transpose(),
                               nijenhuis=None, differential=None, kind="bihom-lie")
    if dual_algebra.dim != a.dim:
        raise DimensionMismatch("dual-side algebra must live on a space of the same dimension")
    return coadjoint_rep(a), dual_action_on_primal(dual_algebra, convention)


# -- twists --------------------------------------------------------------------


def _endomorphism_report(bracket: Tensor3 | None, comul: Tensor3 | None,
                         alpha: Matrix, beta: Matrix) -> Report:
    n = alpha.rows
    entries = [entry("bihom_multiplicativity", "alpha-beta-commute",
                     Residual.from_matrix((alpha @ beta).sub(beta @ alpha)))]
    if bracket is not None:
        for label, m in (("alpha", alpha), ("beta", beta)):
            cells = []
            for i in range(n):
                for j in range(n):
                    lhs = m.apply(bracket.entries[i][j])
                    rhs = apply_bilinear(bracket, m.column(i), m.column(j))
                    cells.extend((((i, j, k), lhs[k] - rhs[k]) for k in range(n)))
            entries.append(entry("bihom_multiplicativity", f"{label}-endomorphism", Residual.collect((n, n, n), cells)))
    if comul is not None:
        from .exact import apply_comul

        for label, m in (("alpha", alpha), ("beta", beta)):
            cells = []
            for k in range(n):
                plane = Matrix.from_rows(comul.entries[k])
                diff = apply_comul(comul, m.column(k)).sub(m @ plane @ m.transpose())
                for i in range(n):
                    for j in range(n):
                        cells.append(((k, i, j), diff.entries[i][j]))
            entries.append(entry("co_comultiplicativity", f"{label}-endomorphism", Residual.collect((n, n, n), cells)))
    return Report(tuple(entries))


def _require_untwisted(alpha: Matrix, beta: Matrix, what: str) -> None:
    ident = Matrix.identity(alpha.rows)
    if alpha != ident or beta != ident:
        raise PreconditionFailed(f"{what} must carry identity structure maps before twisting")


def _twist_bracket(bracket: Tensor3, alpha: Matrix, beta: Matrix) -> Tensor3:
    from .exact import contract
    out = contract(bracket, 0, alpha.transpose())
    return contract(out, 1, beta.transpose())


def _twist_comul(comul: Tensor3, alpha: Matrix, beta: Matrix) -> Tensor3:
    from .exact import contract
    out = contract(comul, 1, alpha)
    return contract(out, 2, beta)


def yau_twist(b: AlgebraBundle | CoalgebraBundle | BialgebraBundle,
              alpha: Matrix, beta: Matrix) -> tuple[AlgebraBundle | CoalgebraBundle | BialgebraBundle, Report]:
    """Twist a plain Lie structure by two commuting endomorphisms.

    The bracket becomes {x,y} = [alpha(x), beta(y)], the comultiplication
    (alpha (x) beta) Delta; the supplied maps become the structure maps of the
    result.  Raises PreconditionFailed with the violated residual if the maps
    do not commute or are not endomorphisms (or, for a bialgebra input, if
    alpha is singular).
    """
    if isinstance(b, BialgebraBundle):
        _require_untwisted(b.algebra.alpha, b.algebra.beta, "bialgebra")
        report = _endomorphism_report(b.algebra.bracket, b.coalgebra.comul, alpha, beta)
        if not report.ok:
            raise PreconditionFailed("supplied maps are not commuting bialgebra endomorphisms", report)
        try:
            invert(alpha)
        except Exception as exc:
            raise PreconditionFailed(f"alpha must be invertible to twist a bialgebra: {exc}") from exc
        alg = AlgebraBundle(b.dim, _twist_bracket(b.algebra.bracket, alpha, beta), alpha, beta,
                            nijenhuis=b.algebra.nijenhuis, differential=b.algebra.differential, kind="bihom-lie")
        co = CoalgebraBundle(b.dim, _twist_comul(b.coalgebra.comul, alpha, beta), alpha, beta,
                             conijenhuis=b.coalgebra.conijenhuis, codiff=b.coalgebra.codiff)
        return BialgebraBundle(alg, co), report
    if isinstance(b, AlgebraBundle):
        _require_untwisted(b.alpha, b.beta, "algebra")
        report = _endomorphism_report(b.bracket, None, alpha, beta)
        if not report.ok:
            raise PreconditionFailed("supplied maps are not commuting bracket endomorphisms", report)
        return AlgebraBundle(b.dim, _twist_bracket(b.bracket, alpha, beta), alpha, beta,
                             nijenhuis=b.nijenhuis, differential=b.differential, kind="bihom-lie"), report
    if isinstance(b, CoalgebraBundle):
        _require_untwisted(b.alpha, b.beta, "coalgebra")
        report = _endomorphism_report(None, b.comul, alpha, beta)
        if not report.ok:
            raise PreconditionFailed("supplied maps are not commuting comultiplication endomorphisms", report)
        return CoalgebraBundle(b.dim, _twist_comul(b.comul, alpha, beta), alpha, beta,
                               conijenhuis=b.conijenhuis, codiff=b.codiff), report
    raise TypeError(f"cannot twist {type(b).__name__}")


def untwist(b: AlgebraBundle | CoalgebraBundle | BialgebraBundle) -> AlgebraBundle | CoalgebraBundle | BialgebraBundle:
    """Undo a twist: compose with the inverses and reset the maps to identity."""
    if isinstance(b, BialgebraBundle):
        return BialgebraBundle(untwist(b.algebra), untwist(b.coalgebra))
    if isinstance(b, AlgebraBundle):
        ainv, binv = invert(b.alpha), invert(b.beta)
        ident = Matrix.identity(b.dim)
        return AlgebraBundle(b.dim, _twist_bracket(b.bracket, ainv, binv), ident, ident,
                             nijenhuis=b.nijenhuis, differential=b.differential, kind="lie")
    if isinstance(b, CoalgebraBundle):
        ainv, binv = invert(b.alpha), invert(b.beta)
        ident = Matrix.identity(b.dim)
        return CoalgebraBundle(b.dim, _twist_comul(b.comul, ainv, binv), ident, ident,
                               conijenhuis=b.conijenhuis, codiff=b.codiff)
    raise TypeError(f"cannot untwist {type(b).__name__}")


def hom_specialize(b: BialgebraBundle, alpha: Matrix) -> tuple[BialgebraBundle, Report]:
    """One-map specialization: bracket postcomposed with alpha, comultiplication
    precomposed, both structure maps set to alpha."""
    from .exact import contract
    _require_untwisted(b.algebra.alpha, b.algebra.beta, "bialgebra")
    report = _endomorphism_report(b.algebra.bracket, b.coalgebra.comul, alpha, alpha)
    if not report.ok:
        raise PreconditionFailed("supplied map is not a bialgebra endomorphism", report)
    bracket = contract(b.algebra.bracket, 2, alpha)
    comul = contract(b.coalgebra.comul, 0, alpha.transpose())
    alg = AlgebraBundle(b.dim, bracket, alpha, alpha,
                        nijenhuis=b.algebra.nijenhuis, differential=b.algebra.differential, kind="bihom-lie")
    co = CoalgebraBundle(b.dim, comul, alpha, alpha,
                         conijenhuis=b.coalgebra.conijenhuis, codiff=b.coalgebra.codiff)
    return BialgebraBundle(alg, co), report


# -- products --------------------------------------------------------------------


def _assemble_bracket(n: int, m: int, ll, lv, vl, vv) -> Tensor3:
    """Structure constants on a direct sum from the four block evaluators."""
    total = n + m
    cells = [[[ZERO] * total for _ in range(total)] for _ in range(total)]

    def put(i: int, j: int, head: Vector, tail: Vector) -> None:
        cells[i][j] = list(head) + list(tail)

    zl, zv = tuple([ZERO] * n), tuple([ZERO] * m)
    for i in range(n):
        for j in range(n):
            put(i, j, ll(i, j), zv)
    for i in range(n):
        for b in range(m):
            head, tail = lv(i, b)
            put(i, n + b, head, tail)
    for a in range(m):
        for j in range(n):
            head, tail = vl(a, j)
            put(n + a, j, head, tail)
    for a in range(m):
        for b in range(m):
            put(n + a, n + b, zl, vv(a, b))
    return Tensor3.from_entries(cells)


def semidirect_product(a: AlgebraBundle, r: RepresentationBundle, flavor: str) -> tuple[AlgebraBundle, Report]:
    """Algebra on L + V from a module candidate; the result passes the full
    suite exactly when the module axioms hold.

    flavor "nijenhuis" needs alpha and q invertible plus the operators N and
    eta; flavor "differential" needs xi and identity structure maps.
    """
    if r.algebra != a:
        raise DimensionMismatch("representation bundle does not belong to the given algebra")
    n, m = a.dim, r.vdim
    zero_l = tuple([ZERO] * n)
    zero_v = tuple([ZERO] * m)

    if flavor == "nijenhuis":
        N = a.require_nijenhuis()
        eta = r.require_eta()
        ainv = invert(a.alpha)
        qinv = invert(r.q)
        ainv_b = ainv @ a.beta
        pq_inv = r.p @ qinv

        def lv(i: int, b: int):
            return zero_l, r.rho[i].column(b)

        def vl(av: int, j: int):
            mat = r.act(ainv_b.column(j))
            return zero_l, tuple(-x for x in mat.apply(pq_inv.column(av)))

        bracket = _assemble_bracket(n, m, a.bracket_basis, lv, vl, lambda x, y: zero_v)
        bundle = AlgebraBundle(
            n + m, bracket, block_diag(a.alpha, r.p), block_diag(a.beta, r.q),
            nijenhuis=block_diag(N, eta), kind="bihom-lie")
        report = check_representation(r).merged(check_nijenhuis_representation(r))
        return bundle, report

    if flavor == "differential":
        da = a.require_differential()
        xi = r.require_xi()
        ident_l, ident_v = Matrix.identity(n), Matrix.identity(m)
        if a.alpha != ident_l or a.beta != ident_l or r.p != ident_v or r.q != ident_v:
            raise PreconditionFailed("differential semidirect products need identity structure maps")

        def lv(i: int, b: int):
            return zero_l, r.rho[i].column(b)

        def vl(av: int, j: int):
            return zero_l, tuple(-x for x in r.rho[j].column(av))

        bracket = _assemble_bracket(n, m, a.bracket_basis, lv, vl, lambda x, y: zero_v)
        bundle = AlgebraBundle(
            n + m, bracket, Matrix.identity(n + m), Matrix.identity(n + m),
            differential=Differential(block_diag(da.matrix, xi), da.weight), kind="lie")
        from .checks import check_diff_rep
        report = check_representation(r).merged(check_diff_rep(r))
        return bundle, report

    raise ValueError(f"unknown semidirect flavor {flavor!r}")


def standard_double_form(n: int) -> FormBundle:
    """Canonical pairing on L + L*: the block-antidiagonal identity Gram."""
    cells = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        cells[i][n + i] = Fraction(1)
        cells[n + i][i] = Fraction(1)
    return FormBundle(Matrix.from_rows(cells))


def double_construction(left: AlgebraBundle, right: AlgebraBundle, flavor: str,
                        convention: str = "representation") -> tuple[DoubleBundle, Report]:
    """Algebra on L + L* from a base algebra and an algebra on its dual, with
    the two coadjoint actions and the canonical pairing form.

    flavor in {"bihom", "nijenhuis", "differential"}.
    """
    if left.dim != right.dim:
        raise DimensionMismatch("double construction needs equal dimensions")
    n = left.dim
    rho = coadjoint_rep(left)
    h = dual_action_on_primal(right, convention)
    zero = tuple([ZERO] * n)

    if flavor in ("bihom", "nijenhuis"):
        ainv = invert(left.alpha)
        binv = invert(left.beta)
        as_inv = invert(right.alpha)
        bs_inv = invert(right.beta)
        ainv_b = ainv @ left.beta
        a_binv = left.alpha @ binv
        as_bsinv = right.alpha @ bs_inv
        asinv_bs = as_inv @ right.beta

        def act_h(v: Vector) -> Matrix:
            out = Matrix.zeros(n, n)
            for i, cf in enumerate(v):
                if cf != 0:
                    out = out.add(h[i].scale(cf))
            return out

        def act_rho(v: Vector) -> Matrix:
            out = Matrix.zeros(n, n)
            for i, cf in enumerate(v):
                if cf != 0:
                    out = out.add(rho[i].scale(cf))
            return out

        def lv(i: int, b: int):
            head = tuple(-x for x in act_h(as_bsinv.column(b)).apply(ainv_b.column(i)))
            tail = rho[i].column(b)
            return head, tail

        def vl(a_idx: int, j: int):
            head = h[a_idx].column(j)
            tail = tuple(-x for x in act_rho(a_binv.column(j)).apply(asinv_bs.column(a_idx)))
            return head, tail

        bracket = _assemble_bracket(n, n, left.bracket_basis, lv, vl, right.bracket_basis)
        nij = None
        if flavor == "nijenhuis":
            nij = block_diag(left.require_nijenhuis(), right.require_nijenhuis())
        total = AlgebraBundle(2 * n, bracket, block_diag(left.alpha, right.alpha),
                              block_diag(left.beta, right.beta), nijenhuis=nij, kind="bihom-lie")
    elif flavor == "differential":
        ident = Matrix.identity(n)
        if left.alpha != ident or left.beta != ident or right.alpha != ident or right.beta != ident:
            raise PreconditionFailed("differential doubles need identity structure maps")
        dl = left.require_differential()
        dr = right.require_differential()
        if dl.weight != dr.weight:
            raise WeightMismatch(f"weights differ: {dl.weight} vs {dr.weight}")

        def lv(i: int, b: int):
            head = tuple(-x for x in h[b].column(i))
            tail = rho[i].column(b)
            return head, tail

        def vl(a_idx: int, j: int):
            head = h[a_idx].column(j)
            tail = tuple(-x for x in rho[j].column(a_idx))
            return head, tail

        bracket = _assemble_bracket(n, n, left.bracket_basis, lv, vl, right.bracket_basis)
        total = AlgebraBundle(2 * n, bracket, Matrix.identity(2 * n), Matrix.identity(2 * n),
                              differential=Differential(block_diag(dl.matrix, dr.matrix), dl.weight), kind="lie")
    else:
        raise ValueError(f"unknown double flavor {flavor!r}")

    report = _restriction_report(total, left, right)
    return DoubleBundle(total, standard_double_form(n), left, right), report


def _restriction_report(total: AlgebraBundle, left: AlgebraBundle, right: AlgebraBundle) -> Report:
    """Verify the combined bracket and operators restrict to the two factors."""
    n, m = left.dim, right.dim
    cells = []
    for i in range(n):
        for j in range(n):
            got = total.bracket.entries[i][j]
            want = left.bracket.entries[i][j]
            cells.extend((((0, i, j, k), got[k] - (want[k] if k < n else ZERO)) for k in range(n + m)))
    for a in range(m):
        for b in range(m):
            got = total.bracket.entries[n + a][n + b]
            want = right.bracket.entries[a][b]
            cells.extend((((1, a, b, k), got[k] - (want[k - n] if k >= n else ZERO)) for k in range(n + m)))
    return Report((entry("subalgebra", "bracket", Residual.collect((2, max(n, m), max(n, m), n + m), cells)),))


def bicrossed_product(mp: MatchedPairBundle, flavor: str, symmetrized: bool = True) -> tuple[AlgebraBundle, Report]:
    """Algebra on L + V from a matched pair of mutually acting algebras.

    The hypothesis report is the full matched-pair check; the construction is
    still carried out when it fails so that both directions of the
    equivalence can be exercised.
    """
    L, V = mp.left, mp.right
    n, m = L.dim, V.dim
    zero_l = tuple([ZERO] * n)

    if flavor == "nijenhuis":
        N = L.require_nijenhuis()
        S = V.require_nijenhuis()
        ainv = invert(L.alpha)
        binv = invert(L.beta)
        pinv = invert(V.alpha)
        qinv = invert(V.beta)
        ainv_b = ainv @ L.beta
        a_binv = L.alpha @ binv
        pq_inv = V.alpha @ qinv
        pinv_q = pinv @ V.beta

        def lv(i: int, b: int):
            head = tuple(-x for x in mp.act_right(pq_inv.column(b)).apply(ainv_b.column(i)))
            tail = mp.rho[i].column(b)
            return head, tail

        def vl(a_idx: int, j: int):
            head = mp.h[a_idx].column(j)
            tail = tuple(-x for x in mp.act_left(a_binv.column(j)).apply(pinv_q.column(a_idx)))
            return head, tail

        bracket = _assemble_bracket(n, m, L.bracket_basis, lv, vl, V.bracket_basis)
        bundle = AlgebraBundle(n + m, bracket, block_diag(L.alpha, V.alpha), block_diag(L.beta, V.beta),
                               nijenhuis=block_diag(N, S), kind="bihom-lie")
        return bundle, check_matched_pair(mp, "nijenhuis")

    if flavor == "differential":
        dl = L.require_differential()
        dv = V.require_differential()
        if dl.weight != dv.weight:
            raise WeightMismatch(f"weights differ: {dl.weight} vs {dv.weight}")
        ident_l, ident_v = Matrix.identity(n), Matrix.identity(m)
        if L.alpha != ident_l or L.beta != ident_l or V.alpha != ident_v or V.beta != ident_v:
            raise PreconditionFailed("differential bicrossed products need identity structure maps")

        def lv(i: int, b: int):
            head = tuple(-x for x in mp.h[b].column(i))
            tail = mp.rho[i].column(b)
            return head, tail

        def vl(a_idx: int, j: int):
            head = mp.h[a_idx].column(j)
            tail = tuple(-x for x in mp.rho[j].column(a_idx))
            return head, tail

        bracket = _assemble_bracket(n, m, L.bracket_basis, lv, vl, V.bracket_basis)
        bundle = AlgebraBundle(n + m, bracket, Matrix.identity(n + m), Matrix.identity(n + m),
                               differential=Differential(block_diag(dl.matrix, dv.matrix), dl.weight), kind="lie")
        return bundle, check_matched_pair(mp, "differential", symmetrized)

    raise ValueError(f"unknown bicrossed flavor {flavor!r}")


def coadjoint_matched_pair(left: AlgebraBundle, right: AlgebraBundle,
                           convention: str = "representation") -> MatchedPairBundle:
    """The matched-pair candidate built from the two coadjoint actions."""
    if left.dim != right.dim:
        raise DimensionMismatch("coadjoint matched pair needs equal dimensions")
    return MatchedPairBundle(left, right, coadjoint_rep(left), dual_action_on_primal(right, convention))


# -- adjoint maps of forms ------------------------------------------------------------


def adjoint_map_wrt_form(n: Matrix, f: FormBundle) -> Matrix:
    """The adjoint of a map with respect to a nondegenerate form:
    gram^-1 . n^T . gram."""
    if (n.rows, n.cols) != (f.dim, f.dim):
        raise DimensionMismatch("map and form dimensions differ")
    g = f.gram
    return invert(g) @ n.transpose() @ g


def rep_equivalence_iso(a: AlgebraBundle, f: FormBundle) -> tuple[Matrix, Report]:
    """The pairing map x -> B(x, -) as an intertwiner between the adjoint
    module and the dual module carrying the adjoint of the operator.

    Returns the matrix of the map together with the report of the
    intertwining identities and bijectivity.
    """
    from .checks import is_involutive
    from .exact import nullspace

    N = a.require_nijenhuis()
    if f.dim != a.dim:
        raise DimensionMismatch("form dimension does not match the algebra")
    ntilde = adjoint_map_wrt_form(N, f)  # raises SingularMatrix on degenerate gram
    n = a.dim
    phi = f.gram.transpose()  # column i holds the pairing functional of e_i
    rho = coadjoint_rep(a)
    entries = []
    cells = []
    for i in range(n):
        ad = Matrix.from_columns([a.bracket_basis(i, k) for k in range(n)])
        diff = (phi @ ad).sub(rho[i] @ phi)
        cells.extend((((i, x, y), diff.entries[x][y]) for x in range(n) for y in range(n)))
    entries.append(entry("rep_hom", "bracket", Residual.collect((n, n, n), cells)))
    entries.append(entry("rep_hom", "operator", Residual.from_matrix((phi @ N).sub(ntilde.transpose() @ phi))))
    entries.append(entry("rep_hom", "alpha", Residual.from_matrix((phi @ a.alpha).sub(a.alpha.transpose() @ phi))))
    entries.append(entry("rep_hom", "beta", Residual.from_matrix((phi @ a.beta).sub(a.beta.transpose() @ phi))))
    kernel = nullspace(phi)
    entries.append(entry("rep_hom", "bijective", Residual.collect(
        (n, len(kernel)), (((i, j), kernel[j][i]) for j in range(len(kernel)) for i in range(n)))))
    notes = []
    if not is_involutive(a):
        notes.append("hypothesis not met: algebra is not involutive (alpha^2 or beta^2 differs from id)")
    return phi, Report(tuple(entries), tuple(notes))
