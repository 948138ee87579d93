"""
Cell complexes and integer homology
===================================

Build the cube, the cross-polytope and a pile of cubes, then read off
f-vectors, Euler characteristics and homology with torsion.
"""

from pathlib import Path

from cubetrees import (
    betti_vector,
    complex_from_file,
    cross_polytope,
    euler_characteristic,
    f_vector,
    hypercube,
    pile_of_cubes,
    skeleton,
    validate_complex,
)

# the 3-cube: faces are words over 0, 1, *
cube = hypercube(3)
print("cube f-vector", f_vector(cube), "chi", euler_characteristic(cube))
print("first edges:", [c.label for c in cube.cells[1]][:4], "...")

# the octahedron is the boundary of the 3-dimensional cross-polytope
octa = cross_polytope(3)
print("octahedron f-vector", f_vector(octa))
for h in betti_vector(octa, reduced=True):
    print(f"  reduced H_{h.dim}: rank {h.betti}, torsion {list(h.torsion)}")

# a 2 x 3 pile of unit squares, and its 1-skeleton
pile = pile_of_cubes((2, 3))
graph = skeleton(pile, 1)
print("pile graph betti:", [h.betti for h in betti_vector(graph)])

# torsion shows up on the projective plane fixture
fixture = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "rp2.json"
rp2 = complex_from_file(fixture)
assert validate_complex(rp2) == []
for h in betti_vector(rp2):
    print(f"RP2 H_{h.dim}: rank {h.betti}, torsion {list(h.torsion)}")
