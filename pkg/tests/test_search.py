"""Structure-finding solvers: linear systems and grid enumeration."""

import dataclasses
import itertools

import pytest

import naive
import support
from bihomlie import bundles, checks, search
from bihomlie.bundles import Differential
from bihomlie.exact import Matrix, scalar


def test_derivation_dimensions_match_independent_elimination():
    for fixture, expected in ((bundles.abelian(2), 4), (bundles.abelian(3), 9),
                              (bundles.aff2(), 2), (bundles.sl2(), 3)):
        sol = search.solve_linear_identity("derivation", algebra=fixture)
        assert sol.dimension == expected
        rows = naive.derivation_rows(naive.as_cells(fixture.bracket))
        assert naive.gauss_nullity(rows, fixture.dim ** 2) == expected


def test_derivation_weight_must_be_zero():
    with pytest.raises(search.NonlinearKind):
        search.solve_linear_identity("derivation", scalar(1), algebra=bundles.aff2())


def test_derivations_contain_zero_and_all_inner_derivations():
    for fixture in (bundles.aff2(), bundles.sl2(), bundles.abelian(3)):
        sol = search.solve_linear_identity("derivation", algebra=fixture)
        assert sol.homogeneous and sol.particular_matrix().is_zero()
        base = support.with_diff(fixture, Matrix.zeros(fixture.dim, fixture.dim), 0)
        span = sol.basis_matrices()
        for i in range(fixture.dim):
            ad = Matrix.from_columns([fixture.bracket_basis(i, k) for k in range(fixture.dim)])
            # ad_x solves the rule, and lies in the solution span
            assert checks.check_diff_leibniz(dataclasses.replace(base, differential=Differential(ad, scalar(0)))).ok
            flat = tuple(x for row in ad.entries for x in row)
            cols = [tuple(x for row in m.entries for x in row) for m in span]
            if cols:
                system = Matrix.from_columns(cols)
                from bihomlie.exact import solve

                assert solve(system, flat) is not None


def test_derivation_solutions_reverify_through_checker():
    for fixture in (bundles.aff2(), bundles.sl2()):
        sol = search.solve_linear_identity("derivation", algebra=fixture)
        base = support.with_diff(fixture, Matrix.zeros(fixture.dim, fixture.dim), 0)
        for m in sol.basis_matrices():
            assert checks.check_diff_leibniz(dataclasses.replace(base, differential=Differential(m, scalar(0)))).ok
        combo = sol.sample(tuple(scalar(k + 1) for k in range(sol.dimension)))
        assert checks.check_diff_leibniz(dataclasses.replace(base, differential=Differential(combo, scalar(0)))).ok


def test_conijenhuis_solutions_reverify():
    from bihomlie.constructions import dualize

    b = bundles.bihom2(2, 3)
    co = dualize(b)
    sol = search.solve_linear_identity("conijenhuis", comul=co.comul, nmap=co.conijenhuis)
    assert not sol.is_empty
    # the transported operator of the dual bundle is one of the solutions
    for coeffs in itertools.product([scalar(0), scalar(1)], repeat=sol.dimension):
        m = sol.sample(coeffs)
        assert checks.check_dual_admissible(co.comul, co.conijenhuis, m).ok


def test_pi_solver_inhomogeneous_with_nonzero_differential():
    d = support.aff2_derivation(0, 1)
    alg = support.with_diff(bundles.aff2(), d, 0)
    sol = search.solve_linear_identity("pi", scalar(0), algebra=alg)
    assert not sol.homogeneous
    if not sol.is_empty:
        for coeffs in itertools.product([scalar(0), scalar(2)], repeat=sol.dimension):
            pi = sol.sample(coeffs)
            assert checks.check_diff_pi(alg, pi).ok


def test_zeta_solver_reverifies():
    alg = support.with_diff(bundles.abelian(2), Matrix.from_rows([[1, 2], [0, 1]]), "1/2")
    rep = support.zero_rep(alg, 2)
    sol = search.solve_linear_identity("zeta", scalar("1/2"), rep=rep)
    assert not sol.is_empty
    for coeffs in itertools.product([scalar(0), scalar(-1)], repeat=min(sol.dimension, 3)):
        padded = coeffs + tuple(scalar(0) for _ in range(sol.dimension - len(coeffs)))
        zeta = sol.sample(padded)
        assert checks.check_diff_zeta(rep, zeta).ok


def test_grid_search_includes_printed_operator():
    b = bundles.bihom2(2, 3)
    grid = [scalar(x) for x in ("1", "0", "-3/2", "2")]
    out = search.grid_search_nijenhuis(b, grid)
    assert b.nijenhuis in out


def test_grid_search_abelian_returns_all_commuting_matrices():
    b = dataclasses.replace(bundles.abelian(2), alpha=Matrix.diagonal([1, 2]), kind="bihom-lie")
    grid = [scalar(0), scalar(1)]
    out = search.grid_search_nijenhuis(b, grid)
    # commuting with diag(1,2) forces off-diagonal zeros: 4 diagonal 0/1 matrices
    assert len(out) == 4
    assert all(m.entries[0][1] == 0 and m.entries[1][0] == 0 for m in out)


def test_grid_search_aff2_contains_scalar_operators():
    out = search.grid_search_nijenhuis(bundles.aff2(), [scalar(-1), scalar(0), scalar(1)])
    for m in (Matrix.identity(2), Matrix.identity(2).neg(), Matrix.zeros(2, 2)):
        assert m in out


def test_grid_search_matches_plain_enumeration():
    b = bundles.aff2()
    grid = [scalar(0), scalar(1)]
    expected = []
    for combo in itertools.product(grid, repeat=4):
        m = Matrix.from_rows([[combo[0], combo[1]], [combo[2], combo[3]]])
        if checks.check_nijenhuis_operator(dataclasses.replace(b, nijenhuis=m)).ok:
            expected.append(m)
    expected.sort(key=lambda m: m.entries)
    assert search.grid_search_nijenhuis(b, grid) == expected


def test_grid_search_pattern_and_budget():
    b = bundles.aff2()
    pattern = [[scalar(1), None], [None, scalar(1)]]
    out = search.grid_search_nijenhuis(b, [scalar(0), scalar(1)], pattern)
    assert all(m.entries[0][0] == 1 and m.entries[1][1] == 1 for m in out)
    with pytest.raises(search.BudgetExceeded):
        search.grid_search_nijenhuis(b, [scalar(k) for k in range(10)], budget=10)


def test_grid_search_results_reverify_and_are_sorted():
    b = bundles.bihom2(2, 3)
    grid = [scalar(x) for x in ("0", "1", "2", "-3/2")]
    out = search.grid_search_nijenhuis(b, grid)
    assert out == sorted(out, key=lambda m: m.entries)
    for m in out:
        assert checks.check_nijenhuis_operator(dataclasses.replace(b, nijenhuis=m)).ok
