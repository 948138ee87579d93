"""Acceptance criteria 1-8, each run at tolerance zero.

Every test records one PASS/FAIL line, printed at the end of the session.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations, product

import conftest
from cubetrees import (
    SparseIntMatrix,
    betti_number,
    build_tree,
    check_tree,
    cross_polytope,
    dual_tree,
    equinumerous_quantities,
    hypercube,
    invariant_factors,
    pile_of_cubes,
    random_generic_comb,
    rank_q,
    skeleton,
    smith_normal_form,
    verify_comb_theorem,
)
from cubetrees.builders import dual_cell
from cubetrees.comb import KDependenceError, comb_from_sets, detect_k_dependence
from cubetrees.homology import check_snf
from cubetrees.verify import sweep

from oracles import bw_sum, cube_edge_endpoints, dense_rank, is_spanning_tree

PILE_BUDGET = 200


@contextmanager
def criterion(number, title):
    info = {}
    try:
        yield info
    except BaseException:
        conftest.ACCEPTANCE_LINES.append(f"[FAIL] AC{number} {title}")
        raise
    detail = ", ".join(f"{k}={v}" for k, v in info.items())
    conftest.ACCEPTANCE_LINES.append(f"[PASS] AC{number} {title} ({detail})")


def piles(n, budget=PILE_BUDGET, lo=1):
    """Sorted size tuples of length n with prod(N_j + 1) <= budget."""
    if n == 0:
        yield ()
        return
    a = lo
    while (a + 1) ** n <= budget:
        for rest in piles(n - 1, budget // (a + 1), a):
            yield (a,) + rest
        a += 1


def test_ac1_theorem1_chain():
    with criterion(1, "five-way tree count identity, 3 <= k <= n <= 6") as info:
        start = time.perf_counter()
        reports = sweep(6, workers=1)
        elapsed = time.perf_counter() - start
        assert [(r.n, r.k) for r in reports] == [
            (n, k) for n in range(3, 7) for k in range(3, n + 1)
        ]
        for r in reports:
            assert r.status == "ok" and r.all_equal, r
            assert r.q_tree == bw_sum(r.n, r.k)
            assert (r.q_dual is None) == (r.k == r.n)
        spots = {(r.n, r.k): r.q_tree for r in reports if r.k == 3}
        assert spots == {(3, 3): 1, (4, 3): 7, (5, 3): 31, (6, 3): 111}
        assert elapsed < 300
        info["cells"] = len(reports)
        info["seconds"] = f"{elapsed:.1f}"


def test_ac2_tree_size_equals_betti():
    with criterion(2, "f_k(tree) = b_{k-1}(P_{k-1}) on cubes, crosses and piles") as info:
        checked = 0
        for n in range(1, 7):
            for make in (hypercube, cross_polytope):
                c = make(n)
                for k in range(1, c.top_dim + 1):
                    tree = build_tree(skeleton(c, k))
                    assert len(tree) == betti_number(skeleton(c, k - 1), k - 1, reduced=True)
                    checked += 1
        shapes = [s for n in range(1, 8) for s in piles(n)]
        for sizes in shapes:
            p = pile_of_cubes(sizes)
            for k in range(1, len(sizes) + 1):
                tree = build_tree(skeleton(p, k))
                assert len(tree) == betti_number(skeleton(p, k - 1), k - 1, reduced=True)
                checked += 1
        info["piles"] = len(shapes)
        info["identities"] = checked


def test_ac3_tree_definition_suite(rp2):
    with criterion(3, "all-but-one facet, full boundary, RP2") as info:
        checked = 0
        for n in range(1, 6):
            for bd in (skeleton(hypercube(n), n - 1), cross_polytope(n)):
                ids = [c.id for c in bd.cells[bd.top_dim]]
                for drop in ids:
                    assert check_tree(bd, set(ids) - {drop}).valid, (n, drop)
                    checked += 1
                full = check_tree(bd, ids)
                assert not full.valid and not full.acyclic
        cert = check_tree(rp2, [c.id for c in rp2.cells[2]])
        assert cert.valid and cert.torsion == (2,)
        info["trees"] = checked
        info["rp2_torsion"] = list(cert.torsion)


def test_ac4_duality_suite():
    with criterion(4, "cube graph trees dualize, incidence transposes") as info:
        graph = skeleton(hypercube(3), 1)
        octa = skeleton(cross_polytope(3), 1)
        words = [c.id for c in graph.cells[1]]
        verts = ["".join(w) for w in product("01", repeat=3)]
        trees = [
            s
            for s in combinations(words, 7)
            if is_spanning_tree(verts, [cube_edge_endpoints(e) for e in s])
        ]
        assert len(trees) == 384
        for t in trees:
            u = dual_tree(3, 1, t)
            assert len(u) == 5 and check_tree(octa, u).valid
        for n in range(1, 6):
            cube, cross = hypercube(n), cross_polytope(n)
            for d in range(1, n):
                rows, cols = cube.cells[d - 1], cube.cells[d]
                expected = {
                    (dual_cell(cols[c].id), dual_cell(rows[r].id)): abs(v)
                    for (r, c), v in cube.boundary(d).entries.items()
                }
                drows, dcols = cross.cells[n - d - 1], cross.cells[n - d]
                actual = {
                    (drows[r].id, dcols[c].id): abs(v)
                    for (r, c), v in cross.boundary(n - d).entries.items()
                }
                assert actual == expected, (n, d)
        info["trees"] = len(trees)


def _random_matrix(rng):
    rows, cols = rng.randint(1, 30), rng.randint(1, 30)
    density = rng.choice([0.05, 0.15, 0.3, 0.6])
    dense = [
        [rng.randint(-100, 100) if rng.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)
    ]
    if rows > 2 and rng.random() < 0.3:
        # copy rows up to sign to force rank deficiency
        for r in rng.sample(range(rows), rows // 3):
            src = rng.randrange(rows)
            sign = rng.choice((1, -1))
            dense[r] = [sign * x for x in dense[src]]
    return dense


def test_ac5_snf_properties():
    with criterion(5, "SNF on 500 random integer matrices") as info:
        rng = random.Random(20240501)
        deficient = torsion = 0
        for _ in range(500):
            dense = _random_matrix(rng)
            a = SparseIntMatrix.from_dense(dense)
            res = smith_normal_form(a)
            assert check_snf(a, res) == []
            nonzero = [d for d in res.diagonal if d]
            assert invariant_factors(a) == nonzero
            assert res.rank == rank_q(a) == dense_rank(dense)
            deficient += res.rank < min(a.rows, a.cols)
            torsion += any(d > 1 for d in nonzero)
        info["rank_deficient"] = deficient
        info["with_torsion"] = torsion


def test_ac6_comb_theorem():
    with criterion(6, "20 generic combs, k = 3") as info:
        shapes = [s for n in range(3, 6) for s in piles(n)]
        values = []
        for seed in range(20):
            sizes = random.Random(seed).choice(shapes)
            sizes = tuple(random.Random(seed + 1000).sample(sizes, len(sizes)))
            cfg = random_generic_comb(sizes, 3, seed=seed)
            assert detect_k_dependence(cfg) is None
            r = verify_comb_theorem(cfg)
            assert r.tree_size == r.skeleton_betti == r.chi_beta
            assert r.chi_lhs == r.chi_rhs
            values.append(r.value)
        bad = comb_from_sets([[0, 1], [0, 2], [5, 6, 8], [3, 4]], 3)
        try:
            verify_comb_theorem(bad)
        except KDependenceError as err:
            assert err.witness.validates(bad)
            assert err.witness.difference == 1
        else:
            raise AssertionError("dependent configuration accepted")
        info["values"] = values


def _corpus(rp2):
    for n in range(1, 6):
        for make in (hypercube, cross_polytope):
            c = make(n)
            for k in range(c.top_dim + 1):
                yield f"{make.__name__}({n})^{k}", skeleton(c, k)
    for sizes in [(2,), (3, 2), (2, 2, 1), (1, 2, 3), (2, 2, 2), (1, 1, 1, 2)]:
        yield f"pile{sizes}", pile_of_cubes(sizes)
    yield "rp2", rp2


def test_ac7_order_invariance(rp2):
    with criterion(7, "build_tree size independent of order") as info:
        count = 0
        for name, c in _corpus(rp2):
            size = len(build_tree(c))
            for seed in range(50):
                assert len(build_tree(c, order="random", seed=seed)) == size, (name, seed)
            count += 1
        info["complexes"] = count


def test_ac8_equinumerosity():
    with criterion(8, "equinumerous quantities, 1 <= k < n <= 5") as info:
        pairs = 0
        for n in range(2, 6):
            for k in range(1, n):
                r = equinumerous_quantities(n, k)
                assert r.q1 == r.q2 == r.q3 == r.q4 == bw_sum(n, k), (n, k)
                assert r.cube_relation
                pairs += 1
        info["pairs"] = pairs
