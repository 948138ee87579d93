"""Cellular spanning trees: certification, greedy construction, duality.

A set T of top cells of a d-complex S (with the reduced Betti number
b_{d-1}(S) equal to zero) is a d-spanning tree when the subcomplex made of T
and the full (d-1)-skeleton has

* H_d(T) = 0,
* H_{d-1}(T) finite, and
* f_d(T) = f_d(S) - b_d(S).

Homology is reduced throughout, so the 1-dimensional case is the usual graph
spanning tree and 0-dimensional trees are single vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .builders import cross_polytope, dual_cell, dual_cell_inverse, hypercube
from .chain import ChainComplex, skeleton
from .homology import (
    IndependenceTracker,
    betti_number,
    chain_dim,
    invariant_factors,
    rank_q,
    reduced_boundary,
)

__all__ = [
    "TreeCertificate",
    "TreeError",
    "check_tree",
    "build_tree",
    "dual_complement",
    "dual_tree",
    "tree_labels",
]


class TreeError(ValueError):
    """Raised when a tree operation's hypothesis fails."""


@dataclass(frozen=True)
class TreeCertificate:
    dim: int
    facets: frozenset[str]
    ambient_betti: int  # reduced b_{d-1} of the ambient complex
    spanning: bool
    acyclic: bool
    top_rank: int  # rank of H_d(T)
    connected: bool
    lower_betti: int  # reduced rank of H_{d-1}(T)
    torsion: tuple[int, ...]
    count: bool
    tree_size: int
    ambient_size: int
    ambient_top_betti: int
    notes: tuple[str, ...] = field(default=())

    @property
    def ambient_ok(self) -> bool:
        return self.ambient_betti == 0

    @property
    def valid(self) -> bool:
        return self.ambient_ok and self.spanning and self.acyclic and self.connected and self.count

    def to_dict(self, ambient: ChainComplex | None = None) -> dict:
        facets = sorted(self.facets)
        if ambient is not None:
            facets = tree_labels(ambient, self.facets)
        return {
            "dim": self.dim,
            "facets": facets,
            "valid": self.valid,
            "checks": {
                "ambient": {"ok": self.ambient_ok, "betti_below": self.ambient_betti},
                "spanning": {"ok": self.spanning},
                "acyclic": {"ok": self.acyclic, "top_rank": self.top_rank},
                "connected": {
                    "ok": self.connected,
                    "betti_below": self.lower_betti,
                    "torsion": list(self.torsion),
                },
                "count": {
                    "ok": self.count,
                    "tree_size": self.tree_size,
                    "ambient_size": self.ambient_size,
                    "ambient_top_betti": self.ambient_top_betti,
                },
            },
            "notes": list(self.notes),
        }


def _top_columns(sigma: ChainComplex, facets: Iterable[str]) -> list[int]:
    d = sigma.top_dim
    cols = []
    for cid in set(facets):
        if cid not in sigma:
            raise KeyError(f"unknown cell {cid!r}")
        dim, i = sigma.locate(cid)
        if dim != d:
            raise ValueError(f"cell {cid!r} has dim {dim}, not the top dim {d}")
        cols.append(i)
    return sorted(cols)


def tree_labels(sigma: ChainComplex, facets: Iterable[str]) -> list[str]:
    """Labels of the given cells, in the complex's cell order."""
    return [sigma.cell(cid).label for cid in sorted(facets, key=sigma.locate)]


def check_tree(sigma: ChainComplex, facets: Iterable[str]) -> TreeCertificate:
    """Evaluate every tree condition for ``facets`` inside ``sigma``.

    All verdicts are computed even when an earlier one fails.
    """
    d = sigma.top_dim
    cols = _top_columns(sigma, facets)
    facet_ids = frozenset(sigma.cells[d][i].id for i in cols)

    top = reduced_boundary(sigma, d, reduced=True).select_columns(cols)
    below = reduced_boundary(sigma, d - 1, reduced=True)
    rank_top = rank_q(top)
    # integer kernels are free, so H_d vanishes iff the columns are Q-independent
    top_rank = len(cols) - rank_top
    factors = invariant_factors(top)
    cycles_below = chain_dim(sigma, d - 1, reduced=True) - (
        rank_q(below) if d >= 1 else 0
    )
    lower_betti = cycles_below - len(factors)

    ambient_below = betti_number(sigma, d - 1, reduced=True)
    ambient_top_betti = betti_number(sigma, d, reduced=True)
    size = sigma.count(d)
    notes = []
    if ambient_below:
        notes.append(
            f"ambient complex has reduced b_{d - 1} = {ambient_below}; trees are undefined"
        )
    if len(factors) != rank_top:
        notes.append("integer and rational ranks disagree")
    return TreeCertificate(
        dim=d,
        facets=facet_ids,
        ambient_betti=ambient_below,
        spanning=True,
        acyclic=top_rank == 0,
        top_rank=top_rank,
        connected=lower_betti == 0,
        lower_betti=lower_betti,
        torsion=tuple(x for x in factors if x > 1),
        count=len(cols) == size - ambient_top_betti,
        tree_size=len(cols),
        ambient_size=size,
        ambient_top_betti=ambient_top_betti,
        notes=tuple(notes),
    )


def build_tree(
    sigma: ChainComplex, order: str = "lex", seed: int | None = None
) -> frozenset[str]:
    """Greedy spanning tree: keep each top cell whose boundary stays independent.

    ``order`` is ``"lex"`` (the complex's label order) or ``"random"``, a
    shuffle driven by ``seed``.
    """
    d = sigma.top_dim
    if betti_number(sigma, d - 1, reduced=True):
        raise TreeError(
            f"reduced b_{d - 1} of the ambient complex is nonzero; no {d}-trees exist"
        )
    cells = list(sigma.cells[d])
    idx = list(range(len(cells)))
    if order == "random":
        random.Random(seed).shuffle(idx)
    elif order != "lex":
        raise ValueError(f"unknown order {order!r}")
    columns = reduced_boundary(sigma, d, reduced=True).column_dicts
    tracker = IndependenceTracker()
    chosen = [cells[i].id for i in idx if tracker.add(columns[i])]
    return frozenset(chosen)


# -- cube / cross-polytope duality ---------------------------------------------


def dual_complement(n: int, i: int, cells: Iterable[str], side: str = "cube") -> frozenset[str]:
    """Duals of the i-faces NOT in ``cells``, on the other side of the duality.

    With ``side="cube"`` the input is a set of i-faces of the n-cube and the
    result a set of (n-1-i)-faces of the n-dimensional cross-polytope; with
    ``side="cross"`` the roles are swapped.
    """
    if not 0 <= i <= n - 1:
        raise ValueError(f"face dimension {i} outside 0..{n - 1}")
    cells = set(cells)
    if side == "cube":
        pool = skeleton(hypercube(n), i).cells[i]
        mapper = dual_cell
    elif side == "cross":
        pool = skeleton(cross_polytope(n), i).cells[i]
        mapper = dual_cell_inverse
    else:
        raise ValueError(f"unknown side {side!r}")
    ids = {c.id for c in pool}
    unknown = cells - ids
    if unknown:
        raise ValueError(f"not {i}-faces on the {side} side: {sorted(unknown)}")
    return frozenset(mapper(c) for c in ids - cells)


def dual_tree(n: int, i: int, tree: Iterable[str], side: str = "cube") -> frozenset[str]:
    """Map an i-tree of one boundary sphere to an (n-1-i)-tree of its dual.

    The input must certify as an i-tree of the i-skeleton of the cube (or
    cross-polytope) boundary; the output is certified on the other side.
    """
    tree = frozenset(tree)
    src = hypercube(n) if side == "cube" else cross_polytope(n)
    dst = cross_polytope(n) if side == "cube" else hypercube(n)
    cert = check_tree(skeleton(src, i), tree)
    if not cert.valid:
        raise TreeError(f"input is not an {i}-tree of the {side} side")
    out = dual_complement(n, i, tree, side)
    back = check_tree(skeleton(dst, n - 1 - i), out)
    if not back.valid:
        raise TreeError("dual set failed certification")
    return out
