from itertools import combinations, product

import pytest

from cubetrees import (
    TreeError,
    build_tree,
    check_tree,
    cross_polytope,
    dual_tree,
    hypercube,
    pile_of_cubes,
    skeleton,
)
from cubetrees.trees import dual_complement, tree_labels

from oracles import bw_sum, cube_edge_endpoints, is_spanning_tree


def _facets(c):
    return [cell.id for cell in c.cells[c.top_dim]]


def test_octahedron_all_but_one():
    octa = cross_polytope(3)
    ids = _facets(octa)
    for drop in ids:
        cert = check_tree(octa, set(ids) - {drop})
        assert cert.valid, drop
        assert cert.torsion == ()


def test_full_octahedron_fails():
    octa = cross_polytope(3)
    cert = check_tree(octa, _facets(octa))
    assert not cert.acyclic and not cert.count
    assert cert.connected and cert.ambient_ok
    assert not cert.valid


def test_rp2_is_its_own_tree(rp2):
    cert = check_tree(rp2, _facets(rp2))
    assert cert.valid
    assert cert.torsion == (2,)


def test_ambient_precondition_reported():
    # two disjoint edges: reduced b_0 = 1, so 1-trees are undefined
    from cubetrees import Cell, ChainComplex

    cells = [Cell(v, 0, v) for v in "abcd"] + [Cell("ab", 1, "ab"), Cell("cd", 1, "cd")]
    c = ChainComplex.from_cells(cells, {"ab": [("b", 1), ("a", -1)], "cd": [("d", 1), ("c", -1)]})
    cert = check_tree(c, ["ab", "cd"])
    assert not cert.ambient_ok and not cert.valid
    assert cert.notes
    with pytest.raises(TreeError):
        build_tree(c)


def test_check_tree_rejects_bad_ids():
    octa = cross_polytope(3)
    with pytest.raises(KeyError):
        check_tree(octa, ["nope"])
    with pytest.raises(ValueError):
        check_tree(octa, ["+00"])


def test_build_tree_examples():
    graph = skeleton(hypercube(3), 1)
    t = build_tree(graph)
    assert len(t) == 7 and check_tree(graph, t).valid
    assert len(build_tree(skeleton(hypercube(4), 2))) == 17
    cube = pile_of_cubes((1, 1, 1))
    t = build_tree(cube)
    assert t == {"i0,i0,i0"}


def test_build_tree_graph_is_spanning_tree():
    graph = skeleton(hypercube(4), 1)
    t = build_tree(graph, order="random", seed=5)
    verts = [c.id for c in graph.cells[0]]
    assert is_spanning_tree(verts, [cube_edge_endpoints(e) for e in t])


def test_build_tree_deterministic():
    c = skeleton(cross_polytope(4), 2)
    assert build_tree(c, "random", seed=3) == build_tree(c, "random", seed=3)
    with pytest.raises(ValueError):
        build_tree(c, order="sideways")


def test_zero_dimensional_trees():
    pts = skeleton(hypercube(2), 0)
    t = build_tree(pts)
    assert len(t) == 1 and check_tree(pts, t).valid
    assert not check_tree(pts, _facets(pts)[:2]).valid


@pytest.mark.parametrize("n", range(1, 6))
def test_built_trees_certify_and_match_formula(n):
    cube = hypercube(n)
    for k in range(1, n + 1):
        s = skeleton(cube, k)
        t = build_tree(s)
        assert check_tree(s, t).valid
        assert len(t) == bw_sum(n, k)


def test_tree_labels_order():
    c = skeleton(hypercube(2), 1)
    assert tree_labels(c, {"1*", "*0"}) == ["*0", "1*"]


def _cube_graph_trees():
    words = [c.id for c in skeleton(hypercube(3), 1).cells[1]]
    verts = ["".join(w) for w in product("01", repeat=3)]
    return [
        set(s)
        for s in combinations(words, 7)
        if is_spanning_tree(verts, [cube_edge_endpoints(e) for e in s])
    ]


def test_dual_tree_examples():
    t = build_tree(skeleton(hypercube(3), 1))
    u = dual_tree(3, 1, t)
    assert len(u) == 5
    assert check_tree(skeleton(cross_polytope(3), 1), u).valid
    assert dual_tree(3, 1, u, side="cross") == t

    t4 = build_tree(skeleton(hypercube(4), 2))
    u4 = dual_tree(4, 2, t4)
    assert len(u4) == 24 - 17 == 7
    assert check_tree(skeleton(cross_polytope(4), 1), u4).valid


def test_dual_tree_top_and_bottom():
    # all-but-one facet of the cube boundary dualizes to a single cross vertex
    bd = skeleton(hypercube(3), 2)
    ids = _facets(bd)
    u = dual_tree(3, 2, ids[1:])
    assert len(u) == 1
    back = dual_tree(3, 0, u, side="cross")
    assert back == set(ids[1:])


def test_dual_tree_rejects_non_tree():
    # the square 0** as a 4-cycle plus three more edges
    edges = ["00*", "01*", "0*0", "0*1", "1*0", "10*", "*11"]
    assert not _is_tree(edges)
    with pytest.raises(TreeError):
        dual_tree(3, 1, edges)


def _is_tree(s):
    verts = ["".join(w) for w in product("01", repeat=3)]
    return is_spanning_tree(verts, [cube_edge_endpoints(e) for e in s])


def test_duality_iff_on_all_seven_edge_sets():
    g = skeleton(hypercube(3), 1)
    octa = skeleton(cross_polytope(3), 1)
    words = [c.id for c in g.cells[1]]
    for s in combinations(words, 7):
        u = dual_complement(3, 1, s)
        assert check_tree(g, s).valid == check_tree(octa, u).valid == _is_tree(s)


@pytest.mark.parametrize("seed", range(10))
def test_duality_sampled_n4(seed):
    cube = skeleton(hypercube(4), 2)
    t = build_tree(cube, "random", seed)
    u = dual_tree(4, 2, t)
    assert check_tree(skeleton(cross_polytope(4), 1), u).valid
    assert dual_tree(4, 1, u, side="cross") == t


def test_cube_graph_has_384_trees():
    assert len(_cube_graph_trees()) == 384
