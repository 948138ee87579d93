"""Closed forms for tree sizes and Betti numbers, with constructive checks.

Everything here is exact: binomials are integers and the pile identity is
evaluated with :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Sequence

from .builders import cross_polytope, hypercube, pile_of_cubes
from .chain import euler_characteristic, f_vector, skeleton
from .homology import betti_number
from .trees import build_tree

__all__ = [
    "bw_betti",
    "tree_size_closed_form",
    "EquinumerousReport",
    "equinumerous_quantities",
    "PileChiResult",
    "pile_chi_rhs",
    "pile_face_count",
    "pile_chi_identity",
    "ResolutionDimension",
    "resolution_added_cell_dim",
]


def bw_betti(n: int, k: int) -> int:
    """Rank of H^{k-2} of the real no-k-equal space of n points (k >= 3)."""
    if not 3 <= k <= n:
        raise ValueError(f"need 3 <= k <= n, got n={n}, k={k}")
    return sum(comb(n, i) * comb(i - 1, k - 1) for i in range(k, n + 1))


def tree_size_closed_form(n: int, k: int) -> int:
    """Number of facets of a k-spanning tree of the k-skeleton of the n-cube."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return sum(comb(n, i) * comb(i - 1, k - 1) for i in range(k, n + 1))


@dataclass(frozen=True)
class EquinumerousReport:
    n: int
    k: int
    q1: int  # k-tree of Cube_{n,k}
    q2: int  # (n-k)-tree of Cross_{n,n-k}
    q3: int  # complement of a (k-1)-tree of Cube_{n,k-1}
    q4: int  # complement of an (n-k-1)-tree of Cross_{n,n-k-1}
    cube_faces_below: int  # f_{k-1} of the cube
    cross_faces_below: int  # f_{n-k-1} of the cross-polytope
    cube_relation: bool  # q1 == C(n,k-1) 2^(n-k+1) - |(k-1)-tree|
    printed_cross_count: int  # C(n,k+1) 2^(n-k-1), as displayed in the source

    @property
    def all_equal(self) -> bool:
        return self.q1 == self.q2 == self.q3 == self.q4

    @property
    def printed_cross_count_matches(self) -> bool:
        return self.printed_cross_count == self.cross_faces_below


def equinumerous_quantities(n: int, k: int) -> EquinumerousReport:
    """Compute the four tree quantities on actual complexes."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    cube = hypercube(n)
    cross = cross_polytope(n)
    q1 = len(build_tree(skeleton(cube, k)))
    q2 = len(build_tree(skeleton(cross, n - k)))
    cube_below = cube.count(k - 1)
    q3 = cube_below - len(build_tree(skeleton(cube, k - 1)))
    cross_below = cross.count(n - k - 1)
    q4 = cross_below - len(build_tree(skeleton(cross, n - k - 1)))
    relation = q1 == comb(n, k - 1) * 2 ** (n - k + 1) - (cube_below - q3)
    return EquinumerousReport(
        n=n,
        k=k,
        q1=q1,
        q2=q2,
        q3=q3,
        q4=q4,
        cube_faces_below=cube_below,
        cross_faces_below=cross_below,
        cube_relation=relation,
        printed_cross_count=comb(n, k + 1) * 2 ** (n - k - 1),
    )


# -- piles of cubes -----------------------------------------------------------


def pile_face_count(sizes: Sequence[int], dim: int) -> int:
    """Number of dim-cells in the pile: sum over axis sets I of |I| = dim."""
    n = len(sizes)
    return sum(
        prod(sizes[i] if i in axes else sizes[i] + 1 for i in range(n))
        for axes in map(set, combinations(range(n), dim))
    )


def pile_chi_rhs(sizes: Sequence[int], k: int) -> Fraction:
    """prod(N_j + 1) * sum_{l<k} (-1)^l sum_{|I|=l} prod_{i in I} N_i/(N_i+1)."""
    ratios = [Fraction(s, s + 1) for s in sizes]
    inner = sum(
        (-1) ** l * sum((prod(c, start=Fraction(1)) for c in combinations(ratios, l)), Fraction(0))
        for l in range(k)
    )
    return prod(s + 1 for s in sizes) * inner


@dataclass(frozen=True)
class PileChiResult:
    lhs: int  # Euler characteristic of the (k-1)-skeleton
    rhs: int  # product formula
    beta: int  # solved from lhs = 1 + (-1)^(k-1) beta
    homology_beta: int  # reduced b_{k-1} of the (k-1)-skeleton
    complement_betti: int | None  # the b_{k-2} reading, only for k >= 3

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and self.beta == self.homology_beta


def pile_chi_identity(sizes: Sequence[int], k: int) -> PileChiResult:
    sizes = tuple(sizes)
    n = len(sizes)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got k={k}")
    if any(s < 1 for s in sizes):
        raise ValueError(f"pile sizes must be positive, got {sizes}")
    rhs = pile_chi_rhs(sizes, k)
    if rhs.denominator != 1:
        raise ArithmeticError(f"pile formula gave a non-integer {rhs}")
    lower = skeleton(pile_of_cubes(sizes), k - 1)
    lhs = euler_characteristic(lower)
    beta = (lhs - 1) * (-1) ** (k - 1)
    hb = betti_number(lower, k - 1, reduced=True)
    return PileChiResult(
        lhs=lhs,
        rhs=int(rhs),
        beta=beta,
        homology_beta=hb,
        complement_betti=beta if k >= 3 else None,
    )


# -- simplicial resolution dimension count -----------------------------------


@dataclass(frozen=True)
class ResolutionDimension:
    n: int
    k: int
    l: int
    dim: int  # n - l(k-1) + (l-1)
    max_multiplicity: int  # floor(n / k)
    vacuous: bool  # l exceeds the multiplicity bound
    claimed_bound: int  # n - k - 2
    homology_bound: int  # n - k - 1
    hyperplane_dim: int  # same count inside the sum-zero hyperplane

    @property
    def within_claimed_bound(self) -> bool:
        return self.dim <= self.claimed_bound

    @property
    def within_homology_bound(self) -> bool:
        return self.dim <= self.homology_bound

    @property
    def hyperplane_within_homology_bound(self) -> bool:
        return self.hyperplane_dim <= self.homology_bound


def resolution_added_cell_dim(n: int, k: int, l: int) -> ResolutionDimension:
    """Dimension of cells glued over l-fold intersections of k-diagonals."""
    if l < 2 or k < 3 or n < k:
        raise ValueError(f"need l >= 2, k >= 3, n >= k; got n={n}, k={k}, l={l}")
    dim = n - l * (k - 1) + (l - 1)
    m = n // k
    return ResolutionDimension(
        n=n,
        k=k,
        l=l,
        dim=dim,
        max_multiplicity=m,
        vacuous=l > m,
        claimed_bound=n - k - 2,
        homology_bound=n - k - 1,
        hyperplane_dim=dim - 1,
    )
