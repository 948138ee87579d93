"""
Higher dimensional spanning trees
=================================

Grow a tree greedily, certify it, and move it across to the dual side.
"""

from cubetrees import (
    build_tree,
    check_tree,
    cross_polytope,
    dual_tree,
    hypercube,
    skeleton,
)
from cubetrees.trees import tree_labels

# a spanning tree of the cube graph is an ordinary tree with 7 edges
graph = skeleton(hypercube(3), 1)
tree = build_tree(graph)
print("cube graph tree:", tree_labels(graph, tree))

cert = check_tree(graph, tree)
print("valid:", cert.valid, "size", len(tree), "expected", cert.tree_size)

# a 2-tree of the 2-skeleton of the 4-cube
square_faces = skeleton(hypercube(4), 2)
t2 = build_tree(square_faces, order="random", seed=1)
print("2-tree of the 4-cube:", len(t2), "squares")

# complementary dual faces form a tree on the cross-polytope side
u = dual_tree(4, 2, t2)
cross_graph = skeleton(cross_polytope(4), 1)
print("dual tree:", tree_labels(cross_graph, u))
print("dual valid:", check_tree(cross_graph, u).valid)

# dropping any single facet of a sphere leaves a tree; keeping all of them does not
octa = cross_polytope(3)
facets = [c.id for c in octa.cells[2]]
print("all but one:", check_tree(octa, facets[1:]).valid)
print("all:", check_tree(octa, facets).valid)
