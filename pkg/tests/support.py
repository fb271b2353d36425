"""Deterministic corpus builders shared by the harness and acceptance tests.

All randomness flows through seeded ``random.Random`` instances so repeated
runs exercise identical instances.
"""

import dataclasses
import random
from fractions import Fraction

from bihomlie import bundles
from bihomlie.bundles import AlgebraBundle, Differential, MatchedPairBundle, RepresentationBundle
from bihomlie.exact import Matrix, Tensor3, scalar

SCALARS = [scalar(x) for x in ("0", "1", "-1", "2", "1/2", "-3/2", "3", "2/3", "-1/3", "5/2", "-2", "4", "1/4")]


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def rational(r: random.Random) -> Fraction:
    return Fraction(r.randint(-3, 3), r.randint(1, 3))


def nonzero_rational(r: random.Random) -> Fraction:
    while True:
        x = rational(r)
        if x != 0:
            return x


def scalar_op(b: AlgebraBundle, c) -> AlgebraBundle:
    return dataclasses.replace(b, nijenhuis=Matrix.identity(b.dim).scale(scalar(c)))


def with_diff(b: AlgebraBundle, m: Matrix, w) -> AlgebraBundle:
    return dataclasses.replace(b, differential=Differential(m, scalar(w)))


def perturb_matrix(m: Matrix, r: random.Random) -> Matrix:
    i = r.randrange(m.rows)
    j = r.randrange(m.cols)
    rows = [list(row) for row in m.entries]
    rows[i][j] += nonzero_rational(r)
    return Matrix.from_rows(rows)


def perturb_tensor3(t: Tensor3, r: random.Random) -> Tensor3:
    i = r.randrange(t.shape[0])
    j = r.randrange(t.shape[1])
    k = r.randrange(t.shape[2])
    cells = [[list(row) for row in plane] for plane in t.entries]
    cells[i][j][k] += nonzero_rational(r)
    return Tensor3.from_entries(cells)


def perturb_algebra(b: AlgebraBundle, r: random.Random) -> AlgebraBundle:
    """Perturb one entry of the bracket or an operator (never the alpha/beta
    maps, so dual coherence preconditions stay intact)."""
    targets = ["bracket"]
    if b.nijenhuis is not None:
        targets.append("nijenhuis")
    if b.differential is not None:
        targets.append("differential")
    choice = r.choice(targets)
    b = dataclasses.replace(b, kind="bihom-lie")
    if choice == "bracket":
        return dataclasses.replace(b, bracket=perturb_tensor3(b.bracket, r))
    if choice == "nijenhuis":
        return dataclasses.replace(b, nijenhuis=perturb_matrix(b.nijenhuis, r))
    return dataclasses.replace(b, differential=Differential(perturb_matrix(b.differential.matrix, r), b.differential.weight))


def antisym_dual2(u, v) -> AlgebraBundle:
    """Dimension-2 algebra on the dual space with bracket [f1,f2] = u f1 + v f2."""
    u, v = scalar(u), scalar(v)
    cells = [[[Fraction(0)] * 2 for _ in range(2)] for _ in range(2)]
    cells[0][1] = [u, v]
    cells[1][0] = [-u, -v]
    kind = "lie"
    return AlgebraBundle(2, Tensor3.from_entries(cells), Matrix.identity(2), Matrix.identity(2), kind=kind)


def adjoint_rep(b: AlgebraBundle, eta: Matrix | None = None, xi: Matrix | None = None) -> RepresentationBundle:
    """rho = ad, p = alpha, q = beta."""
    n = b.dim
    rho = tuple(Matrix.from_columns([b.bracket_basis(i, k) for k in range(n)]) for i in range(n))
    return RepresentationBundle(b, n, rho, b.alpha, b.beta, eta=eta, xi=xi)


def zero_rep(b: AlgebraBundle, vdim: int, p: Matrix | None = None, q: Matrix | None = None,
             eta: Matrix | None = None, xi: Matrix | None = None) -> RepresentationBundle:
    rho = tuple(Matrix.zeros(vdim, vdim) for _ in range(b.dim))
    return RepresentationBundle(b, vdim, rho, p or Matrix.identity(vdim), q or Matrix.identity(vdim), eta=eta, xi=xi)


def aff2_derivation(a21, a22) -> Matrix:
    """The general derivation of aff2 (first column free in the e2 slot)."""
    return Matrix.from_rows([[0, 0], [scalar(a21), scalar(a22)]])


# -- triad families ---------------------------------------------------------------


def nijenhuis_triad_family() -> list[tuple[AlgebraBundle, AlgebraBundle]]:
    """The base-family instances: all should be all-true."""
    aff = bundles.aff2()
    out = []
    for n_op in ("0", "1", "2", "-3/2"):
        for s_op in ("0", "1", "1/2"):
            out.append((scalar_op(aff, n_op), scalar_op(bundles.abelian(2), s_op)))
    # non-abelian duals stay compatible with scalar operators
    for u, v in (("0", "1"), ("1", "0"), ("2", "-1/2")):
        out.append((scalar_op(aff, "1"), scalar_op(antisym_dual2(u, v), "1")))
        out.append((scalar_op(aff, "-2"), scalar_op(antisym_dual2(u, v), "1/3")))
    out.append((scalar_op(bundles.abelian(2), "0"), scalar_op(bundles.abelian(2), "0")))
    return out


def differential_triad_family() -> list[tuple[AlgebraBundle, AlgebraBundle]]:
    aff = bundles.aff2()
    ab = bundles.abelian(2)
    out = []
    zero = Matrix.zeros(2, 2)
    for w in ("0", "1", "-2", "1/2"):
        for s in ("0", "1", "-1/2"):
            out.append((with_diff(aff, zero, w), with_diff(ab, Matrix.identity(2).scale(scalar(s)), w)))
    for u, v in (("0", "1"), ("1", "-1")):
        out.append((with_diff(aff, zero, "3"), with_diff(antisym_dual2(u, v), zero, "3")))
    r = rng(1202)
    for w in ("0", "2", "-1/3"):
        d = Matrix.from_rows([[rational(r) for _ in range(2)] for _ in range(2)])
        dd = Matrix.from_rows([[rational(r) for _ in range(2)] for _ in range(2)])
        out.append((with_diff(ab, d, w), with_diff(bundles.abelian(2), dd, w)))
    return out


# -- representation corpora ----------------------------------------------------------


def semidirect_valid(count: int) -> list[tuple[AlgebraBundle, RepresentationBundle]]:
    out = []
    algebras = [bundles.aff2(), bundles.sl2(), bundles.abelian(2), bundles.abelian(3)]
    for base in algebras:
        for c in SCALARS[:7]:
            alg = scalar_op(base, c)
            eta = Matrix.identity(alg.dim).scale(c) if c != 0 else Matrix.zeros(alg.dim, alg.dim)
            out.append((alg, adjoint_rep(alg, eta=eta)))
            if len(out) >= count:
                return out
    r = rng(77)
    while len(out) < count:
        base = algebras[r.randrange(len(algebras))]
        alg = scalar_op(base, SCALARS[r.randrange(len(SCALARS))])
        vdim = r.choice([1, 2, 3])
        diag = Matrix.diagonal([nonzero_rational(r) for _ in range(vdim)])
        eta = Matrix.diagonal([rational(r) for _ in range(vdim)])
        out.append((alg, zero_rep(alg, vdim, p=diag, q=Matrix.identity(vdim), eta=eta)))
    return out


def _rep_is_valid(rep: RepresentationBundle, flavor: str) -> bool:
    from bihomlie import checks

    ok = checks.check_representation(rep).ok
    if flavor == "nijenhuis":
        ok = ok and checks.check_nijenhuis_representation(rep).ok
    if flavor == "differential":
        ok = ok and checks.check_diff_rep(rep).ok
    return ok


def _perturb_rep(rep: RepresentationBundle, r: random.Random, fields: list[str]) -> RepresentationBundle:
    which = r.choice(fields)
    if which == "rho":
        idx = r.randrange(len(rep.rho))
        rho = list(rep.rho)
        rho[idx] = perturb_matrix(rho[idx], r)
        return dataclasses.replace(rep, rho=tuple(rho))
    return dataclasses.replace(rep, **{which: perturb_matrix(getattr(rep, which), r)})


def semidirect_broken(count: int) -> list[tuple[AlgebraBundle, RepresentationBundle]]:
    """Verified-broken instances: at least one module axiom fails."""
    out = []
    r = rng(78)
    valid = semidirect_valid(max(count, 20))
    while len(out) < count:
        alg, rep = valid[r.randrange(len(valid))]
        cand = _perturb_rep(rep, r, ["rho", "eta", "p"])
        if not _rep_is_valid(cand, "nijenhuis"):
            out.append((alg, cand))
    return out


def semidirect_diff_valid(count: int) -> list[tuple[AlgebraBundle, RepresentationBundle]]:
    out = []
    r = rng(79)
    for a21 in ("0", "1", "-2"):
        for a22 in ("0", "1/2", "3"):
            alg = with_diff(bundles.aff2(), aff2_derivation(a21, a22), 0)
            out.append((alg, adjoint_rep(alg, xi=alg.differential.matrix)))
    while len(out) < count:
        dim = r.choice([2, 3])
        w = rational(r)
        d = Matrix.from_rows([[rational(r) for _ in range(dim)] for _ in range(dim)])
        alg = with_diff(bundles.abelian(dim), d, w)
        vdim = r.choice([1, 2])
        xi = Matrix.from_rows([[rational(r) for _ in range(vdim)] for _ in range(vdim)])
        out.append((alg, zero_rep(alg, vdim, xi=xi)))
    return out[:count]


def semidirect_diff_broken(count: int) -> list[tuple[AlgebraBundle, RepresentationBundle]]:
    out = []
    r = rng(80)
    valid = semidirect_diff_valid(max(count, 20))
    while len(out) < count:
        alg, rep = valid[r.randrange(len(valid))]
        cand = _perturb_rep(rep, r, ["rho", "xi"])
        if not _rep_is_valid(cand, "differential"):
            out.append((alg, cand))
    return out


def _zero_actions(left: AlgebraBundle, right: AlgebraBundle) -> MatchedPairBundle:
    rho = tuple(Matrix.zeros(right.dim, right.dim) for _ in range(left.dim))
    h = tuple(Matrix.zeros(left.dim, left.dim) for _ in range(right.dim))
    return MatchedPairBundle(left, right, rho, h)


def bicrossed_valid(count: int) -> list[MatchedPairBundle]:
    from bihomlie.constructions import coadjoint_matched_pair

    out = []
    for u, v in (("0", "0"), ("0", "1"), ("1", "0"), ("1", "-1"), ("2", "1/2"), ("-1", "1/3")):
        for n_op, s_op in (("0", "0"), ("1", "1"), ("2", "1/2"), ("-3/2", "1"), ("1", "0")):
            left = scalar_op(bundles.aff2(), n_op)
            right = scalar_op(antisym_dual2(u, v), s_op)
            out.append(coadjoint_matched_pair(left, right))
    pairs = [(bundles.sl2(), bundles.aff2()), (bundles.aff2(), bundles.abelian(3)), (bundles.abelian(2), bundles.aff2())]
    for base_l, base_r in pairs:
        for c in SCALARS[:8]:
            out.append(_zero_actions(scalar_op(base_l, c), scalar_op(base_r, c)))
    return out[:count]


def _perturb_mp(mp: MatchedPairBundle, r: random.Random, allow_algebras: bool) -> MatchedPairBundle:
    choices = ["rho", "h"] + (["left", "right"] if allow_algebras else ["left_diff"])
    which = r.choice(choices)
    if which == "rho":
        idx = r.randrange(len(mp.rho))
        rho = list(mp.rho)
        rho[idx] = perturb_matrix(rho[idx], r)
        return dataclasses.replace(mp, rho=tuple(rho))
    if which == "h":
        idx = r.randrange(len(mp.h))
        h = list(mp.h)
        h[idx] = perturb_matrix(h[idx], r)
        return dataclasses.replace(mp, h=tuple(h))
    if which == "left":
        return dataclasses.replace(mp, left=perturb_algebra(mp.left, r))
    if which == "right":
        return dataclasses.replace(mp, right=perturb_algebra(mp.right, r))
    left = dataclasses.replace(
        mp.left, differential=Differential(perturb_matrix(mp.left.differential.matrix, r), mp.left.differential.weight))
    return dataclasses.replace(mp, left=left)


def bicrossed_broken(count: int) -> list[MatchedPairBundle]:
    from bihomlie import checks

    out = []
    r = rng(81)
    valid = bicrossed_valid(max(count, 20))
    while len(out) < count:
        cand = _perturb_mp(valid[r.randrange(len(valid))], r, allow_algebras=True)
        if not checks.check_matched_pair(cand, "nijenhuis").ok:
            out.append(cand)
    return out


def bicrossed_diff_valid(count: int) -> list[MatchedPairBundle]:
    from bihomlie.constructions import coadjoint_matched_pair

    out = []
    zero = Matrix.zeros(2, 2)
    for w in ("0", "1", "-1/2"):
        for s in ("0", "1", "2", "-1/3"):
            left = with_diff(bundles.aff2(), zero, w)
            right = with_diff(bundles.abelian(2), Matrix.identity(2).scale(scalar(s)), w)
            out.append(coadjoint_matched_pair(left, right))
    for u, v in (("0", "1"), ("1", "-1")):
        left = with_diff(bundles.aff2(), zero, "2")
        right = with_diff(antisym_dual2(u, v), zero, "2")
        out.append(coadjoint_matched_pair(left, right))
    r = rng(82)
    while len(out) < count:
        dim = r.choice([2, 3])
        w = rational(r)
        d = Matrix.from_rows([[rational(r) for _ in range(dim)] for _ in range(dim)])
        dd = Matrix.from_rows([[rational(r) for _ in range(dim)] for _ in range(dim)])
        out.append(_zero_actions(with_diff(bundles.abelian(dim), d, w), with_diff(bundles.abelian(dim), dd, w)))
    return out[:count]


def bicrossed_diff_broken(count: int) -> list[MatchedPairBundle]:
    from bihomlie import checks

    out = []
    r = rng(83)
    valid = bicrossed_diff_valid(max(count, 20))
    while len(out) < count:
        cand = _perturb_mp(valid[r.randrange(len(valid))], r, allow_algebras=False)
        if not checks.check_matched_pair(cand, "differential").ok:
            out.append(cand)
    return out
