import json

import pytest

from cubetrees import (
    Cell,
    ChainComplex,
    ComplexFormatError,
    SparseIntMatrix,
    complex_from_file,
    complex_to_file,
    cross_polytope,
    euler_characteristic,
    f_vector,
    facet_subcomplex,
    hypercube,
    pile_of_cubes,
    skeleton,
    validate_complex,
)
from cubetrees.chain import complex_from_dict, complex_to_dict

from oracles import cross_words_by_dim, cube_words_by_dim, grid_counts


def test_hypercube_is_valid():
    assert validate_complex(hypercube(3)) == []


def test_fabricated_violation_names_degree():
    cells = [
        Cell("a", 0, "a"),
        Cell("b", 0, "b"),
        Cell("e", 1, "e"),
        Cell("t", 2, "t"),
    ]
    c = ChainComplex.from_cells(cells, {"e": [("a", 1), ("b", 1)], "t": [("e", 1)]})
    report = validate_complex(c)
    assert len(report) == 1
    assert "boundary 1 o boundary 2" in report[0]


def test_validate_reports_unsorted_and_bad_shape():
    good = hypercube(1)
    shuffled = ChainComplex(1, (tuple(reversed(good.cells[0])), good.cells[1]), good.boundaries)
    assert any("sorted" in p for p in validate_complex(shuffled))
    bad = ChainComplex(1, good.cells, (SparseIntMatrix.zeros(5, 1),))
    assert any("shape" in p for p in validate_complex(bad))


def test_rp2_fixture(rp2):
    assert validate_complex(rp2) == []
    assert f_vector(rp2) == (6, 15, 10)
    # hand check: triangle 123 has boundary 23 - 13 + 12
    assert sorted(rp2.boundary_chain("t123")) == [("e12", 1), ("e13", -1), ("e23", 1)]


@pytest.mark.parametrize(
    "c, expected",
    [
        (hypercube(3), (8, 12, 6, 1)),
        (cross_polytope(3), (6, 12, 8)),
        (pile_of_cubes((2, 2)), (9, 12, 4)),
    ],
)
def test_f_vector_examples(c, expected):
    assert f_vector(c) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_f_vector_matches_enumeration(n):
    assert f_vector(hypercube(n)) == cube_words_by_dim(n)
    assert f_vector(cross_polytope(n)) == cross_words_by_dim(n)


@pytest.mark.parametrize("sizes", [(2, 2), (2, 1), (3,), (1, 2, 3), (2, 2, 2)])
def test_pile_f_vector_matches_grid(sizes):
    assert f_vector(pile_of_cubes(sizes)) == grid_counts(sizes)


def test_euler_characteristic():
    for n in (1, 2, 3, 4):
        assert euler_characteristic(hypercube(n)) == 1
    assert euler_characteristic(skeleton(hypercube(3), 2)) == 2
    assert euler_characteristic(skeleton(pile_of_cubes((2, 2)), 1)) == -3


def test_skeleton():
    c = hypercube(4)
    assert f_vector(skeleton(c, 2)) == (16, 32, 24)
    assert skeleton(c, 4) is c
    s0 = skeleton(c, 0)
    assert s0.top_dim == 0 and s0.boundaries == ()
    for k in range(5):
        assert f_vector(skeleton(c, k)) == f_vector(c)[: k + 1]
    with pytest.raises(ValueError):
        skeleton(c, 5)
    with pytest.raises(ValueError):
        skeleton(c, -1)


def test_facet_subcomplex():
    octa = cross_polytope(3)
    ids = [cell.id for cell in octa.cells[2]]
    assert facet_subcomplex(octa, ids) == octa
    sub = facet_subcomplex(octa, ids[:7])
    assert f_vector(sub) == (6, 12, 7)
    assert validate_complex(sub) == []
    assert facet_subcomplex(octa, []) == skeleton(octa, 1)
    with pytest.raises(KeyError):
        facet_subcomplex(octa, ["nope"])
    with pytest.raises(ValueError):
        facet_subcomplex(octa, ["+00"])


def test_round_trip(tmp_path):
    for c in (hypercube(2), cross_polytope(3), pile_of_cubes((2, 1))):
        path = tmp_path / "c.json"
        complex_to_file(c, path)
        back = complex_from_file(path)
        assert back == c
        assert back.cells == c.cells


def test_rp2_round_trip_bit_exact(rp2_path, rp2, tmp_path):
    out = tmp_path / "rp2.json"
    complex_to_file(rp2, out)
    assert out.read_text() == rp2_path.read_text()


def test_big_coefficients_round_trip():
    cells = [Cell("a", 0, "a"), Cell("b", 0, "b"), Cell("e", 1, "e")]
    big = 2**70 + 3
    c = ChainComplex.from_cells(cells, {"e": [("a", big), ("b", -big)]})
    data = complex_to_dict(c)
    text = json.dumps(data)
    assert str(big) in text
    assert complex_from_dict(json.loads(text)) == c


def test_malformed_unknown_cell(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps(
            {
                "top_dim": 1,
                "cells": [
                    {"id": "a", "dim": 0, "label": "a", "boundary": []},
                    {"id": "e", "dim": 1, "label": "e", "boundary": [["zz", 1]]},
                ],
            }
        )
    )
    with pytest.raises(ComplexFormatError, match="unknown cell 'zz'"):
        complex_from_file(path)


def test_malformed_json_reports_line(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n "top_dim": 1,\n "cells": [\n')
    with pytest.raises(ComplexFormatError, match="line"):
        complex_from_file(path)


@pytest.mark.parametrize(
    "data, match",
    [
        ([], "object"),
        ({"cells": []}, "top_dim"),
        ({"top_dim": 0, "cells": [{"id": "a"}]}, "missing field"),
        ({"top_dim": 0, "cells": [{"id": "a", "dim": "x", "label": "a", "boundary": []}]}, "dim"),
    ],
)
def test_malformed_fields(data, match):
    with pytest.raises(ComplexFormatError, match=match):
        complex_from_dict(data)


def test_sparse_matrix_basics():
    a = SparseIntMatrix.from_dense([[1, 2], [0, 3]])
    assert a.to_dense() == [[1, 2], [0, 3]]
    assert a.transpose().to_dense() == [[1, 0], [2, 3]]
    assert (a @ SparseIntMatrix.identity(2)) == a
    assert a.select_columns([1]).to_dense() == [[2], [3]]
    assert SparseIntMatrix(2, 2, {(0, 0): 0}).nnz == 0
