"""Bundle types, fixtures and serialization round-trips."""

import dataclasses
import json

import pytest

from bihomlie import bundles
from bihomlie.bundles import (
    AlgebraBundle,
    BialgebraBundle,
    CoalgebraBundle,
    Differential,
    FormBundle,
    MatchedPairBundle,
    ParseError,
    RepresentationBundle,
    dual_basis_transpose,
    fixture_by_name,
)
from bihomlie.exact import DimensionMismatch, Matrix, Tensor3, scalar


def _sample_algebra():
    return dataclasses.replace(
        bundles.bihom2(2, 3),
        differential=Differential(Matrix.zeros(2, 2), scalar("1/2")),
    )


def _sample_coalgebra():
    from bihomlie.constructions import dualize

    co = dualize(bundles.aff2())
    return dataclasses.replace(co, conijenhuis=Matrix.identity(2),
                               codiff=Differential(Matrix.from_rows([[1, 2], [3, 4]]), scalar(0)))


def test_roundtrip_algebra():
    b = _sample_algebra()
    assert bundles.load(bundles.dumps(b)) == b


def test_roundtrip_coalgebra():
    c = _sample_coalgebra()
    assert bundles.load(bundles.dumps(c)) == c


def test_roundtrip_bialgebra():
    from bihomlie.constructions import dualize

    alg = bundles.aff2()
    b = BialgebraBundle(alg, dualize(bundles.abelian(2)))
    assert bundles.load(bundles.dumps(b)) == b


def test_roundtrip_representation():
    import support

    r = support.adjoint_rep(dataclasses.replace(bundles.aff2(), nijenhuis=Matrix.identity(2)),
                            eta=Matrix.identity(2))
    assert bundles.load(bundles.dumps(r)) == r


def test_roundtrip_matched_pair():
    import support

    mp = support.bicrossed_valid(3)[1]
    assert bundles.load(bundles.dumps(mp)) == mp


def test_roundtrip_form():
    f = FormBundle(Matrix.from_rows([[0, 1], [1, 0]]))
    assert bundles.load(bundles.dumps(f)) == f


def test_load_golden_document_bracket_entry():
    b = bundles.bihom2(2, 3)
    doc = json.loads(bundles.dumps(b))
    first = doc["bracket"][0]
    assert (first["i"], first["j"]) == (1, 2)
    assert first["out"] == ["-3", "2"]  # [e1, e2] = -3 e1 + 2 e2
    assert bundles.load(bundles.dumps(b)).bracket.entries[0][1] == (scalar(-3), scalar(2))


def test_load_abelian_document():
    doc = {"kind": "algebra", "dim": 3, "variant": "lie"}
    b = bundles.from_document(doc)
    assert b.bracket.is_zero()
    assert b.alpha == Matrix.identity(3)


def test_load_dimension_mismatch():
    doc = {
        "kind": "algebra", "dim": 2, "variant": "bihom-lie",
        "alpha": [["1", "0"], ["0", "1"]], "beta": [["1", "0"], ["0", "1"]],
        "nijenhuis": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    }
    with pytest.raises(DimensionMismatch):
        bundles.from_document(doc)


def test_parse_error_reports_line_and_field():
    with pytest.raises(ParseError, match="line"):
        bundles.load("{ not json")
    with pytest.raises(ParseError, match="bracket"):
        bundles.from_document({"kind": "algebra", "dim": 2, "bracket": [{"i": 1, "out": ["1", "0"]}]})


def test_lie_kind_forces_identity_maps():
    cells = Tensor3.zeros((2, 2, 2))
    with pytest.raises(ParseError):
        AlgebraBundle(2, cells, Matrix.diagonal([2, 1]), Matrix.identity(2), kind="lie")


def test_dual_basis_transpose():
    ident = Matrix.identity(3)
    assert dual_basis_transpose(ident) == ident
    m = bundles.bihom2(2, 3).alpha
    assert dual_basis_transpose(m) == Matrix.from_rows([["1", "0"], ["1/2", "2/3"]])
    assert dual_basis_transpose(dual_basis_transpose(m)) == m


def test_dual_basis_transpose_reverses_composition():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [5, "1/2"]])
    assert dual_basis_transpose(a @ b) == dual_basis_transpose(b) @ dual_basis_transpose(a)


def test_bihom2_frozen_values():
    b = bundles.bihom2(2, 3)
    assert b.alpha.column(1) == (scalar("1/2"), scalar("2/3"))
    assert b.nijenhuis.column(1) == (scalar("-3/2"), scalar(2))
    assert b.beta == Matrix.identity(2)


def test_bihom2_rejects_degenerate_parameters():
    for m, n in ((0, 3), (2, 0), (2, 1)):
        with pytest.raises(ValueError):
            bundles.bihom2(m, n)


def test_abelian_bracket_zero():
    assert bundles.abelian(3).bracket.is_zero()


def test_fixture_by_name():
    assert fixture_by_name("sl2") == bundles.sl2()
    assert fixture_by_name("abelian(4)").dim == 4
    assert fixture_by_name("bihom2(2, 3)") == bundles.bihom2(2, 3)
    with pytest.raises(ParseError):
        fixture_by_name("nope")
    with pytest.raises(ParseError):
        fixture_by_name("sl2(3)")


def test_representation_dimension_validation():
    alg = bundles.aff2()
    with pytest.raises(DimensionMismatch):
        RepresentationBundle(alg, 2, (Matrix.identity(2),), Matrix.identity(2), Matrix.identity(2))
    with pytest.raises(DimensionMismatch):
        RepresentationBundle(alg, 2, (Matrix.identity(2), Matrix.identity(3)), Matrix.identity(2), Matrix.identity(2))


def test_bialgebra_requires_shared_maps():
    from bihomlie.constructions import dualize

    alg = bundles.bihom2(2, 3)
    co = dualize(bundles.abelian(2))  # identity maps, but algebra maps differ
    with pytest.raises(ParseError):
        BialgebraBundle(alg, co)


def test_matched_pair_validation():
    left, right = bundles.aff2(), bundles.abelian(3)
    rho = tuple(Matrix.zeros(3, 3) for _ in range(2))
    h = tuple(Matrix.zeros(2, 2) for _ in range(3))
    MatchedPairBundle(left, right, rho, h)
    with pytest.raises(DimensionMismatch):
        MatchedPairBundle(left, right, rho, h[:2])
