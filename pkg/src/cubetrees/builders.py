"""Hypercubes, cross-polytopes and piles of cubes as chain complexes.

Encodings (also used verbatim as cell ids and labels):

* cube faces are words over ``0 1 *``; the dimension is the number of stars;
* cross-polytope faces are words over ``+ - 0`` with at least one nonzero
  symbol; the dimension is one less than the number of nonzero symbols;
* pile cells are comma separated per-axis tokens, ``v<a>`` for the grid
  point ``a`` and ``i<a>`` for the unit interval ``[a, a+1]``.

Orientation: the j-th star (or interval) from the left contributes
``(-1)**(j-1) * (upper face - lower face)`` to the boundary.  Cross-polytope
faces are oriented as simplices with vertices in axis order.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Sequence

from .chain import Cell, ChainComplex

__all__ = [
    "hypercube",
    "cross_polytope",
    "pile_of_cubes",
    "cube_face_dim",
    "cross_face_dim",
    "cube_contains",
    "cross_contains",
    "dual_cell",
    "dual_cell_inverse",
    "pile_cell_tokens",
]

_CUBE_TO_CROSS = {"*": "0", "1": "+", "0": "-"}
_CROSS_TO_CUBE = {v: k for k, v in _CUBE_TO_CROSS.items()}


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")


def cube_face_dim(word: str) -> int:
    return word.count("*")


def cross_face_dim(word: str) -> int:
    return sum(ch != "0" for ch in word) - 1


def _cube_boundary(word: str) -> list[tuple[str, int]]:
    chain = []
    sign = 1
    for p, ch in enumerate(word):
        if ch == "*":
            chain.append((word[:p] + "1" + word[p + 1 :], sign))
            chain.append((word[:p] + "0" + word[p + 1 :], -sign))
            sign = -sign
    return chain


def hypercube(n: int) -> ChainComplex:
    """The solid n-cube, top cell ``*`` * n included."""
    _check_n(n)
    cells, boundary = [], {}
    for letters in product("01*", repeat=n):
        word = "".join(letters)
        cells.append(Cell(word, cube_face_dim(word), word))
        boundary[word] = _cube_boundary(word)
    return ChainComplex.from_cells(cells, boundary, top_dim=n)


def cross_polytope(n: int) -> ChainComplex:
    """Boundary complex of the n-dimensional cross-polytope, a sphere S^(n-1)."""
    _check_n(n)
    cells, boundary = [], {}
    for letters in product("+-0", repeat=n):
        word = "".join(letters)
        support = [p for p, ch in enumerate(word) if ch != "0"]
        if not support:
            continue
        cells.append(Cell(word, len(support) - 1, word))
        chain = []
        if len(support) > 1:
            for t, p in enumerate(support):
                chain.append((word[:p] + "0" + word[p + 1 :], (-1) ** t))
        boundary[word] = chain
    return ChainComplex.from_cells(cells, boundary, top_dim=n - 1)


def _pile_label(tokens: Sequence[str]) -> str:
    return ",".join(tokens)


def pile_cell_tokens(label: str) -> list[tuple[str, int]]:
    """Parse a pile label into ``(kind, value)`` pairs, kind ``'v'`` or ``'i'``."""
    return [(tok[0], int(tok[1:])) for tok in label.split(",")]


def pile_of_cubes(sizes: Sequence[int]) -> ChainComplex:
    """The box ``[0, N_1] x ... x [0, N_n]`` cut into unit cubes."""
    sizes = tuple(sizes)
    if not sizes:
        raise ValueError("a pile needs at least one axis")
    for s in sizes:
        if not isinstance(s, int) or s <= 0:
            raise ValueError(f"pile sizes must be positive integers, got {sizes!r}")
    axes = [
        [f"v{a}" for a in range(s + 1)] + [f"i{a}" for a in range(s)] for s in sizes
    ]
    cells, boundary = [], {}
    for tokens in product(*axes):
        label = _pile_label(tokens)
        chain = []
        sign = 1
        for p, tok in enumerate(tokens):
            if tok[0] == "i":
                a = int(tok[1:])
                upper = tokens[:p] + (f"v{a + 1}",) + tokens[p + 1 :]
                lower = tokens[:p] + (f"v{a}",) + tokens[p + 1 :]
                chain.append((_pile_label(upper), sign))
                chain.append((_pile_label(lower), -sign))
                sign = -sign
        dim = sum(tok[0] == "i" for tok in tokens)
        cells.append(Cell(label, dim, label))
        boundary[label] = chain
    return ChainComplex.from_cells(cells, boundary, top_dim=len(sizes))


def _cube_le(a: str, b: str) -> bool:
    return a == b or b == "*"


def cube_contains(outer: str, inner: str) -> bool:
    """Face order on cube words: ``inner <= outer`` letterwise, 0 and 1 below *."""
    return len(outer) == len(inner) and all(_cube_le(x, y) for x, y in zip(inner, outer))


def cross_contains(outer: str, inner: str) -> bool:
    """Inclusion of cross-polytope faces: ``inner`` agrees with ``outer`` on its support."""
    return len(outer) == len(inner) and all(
        x == "0" or x == y for x, y in zip(inner, outer)
    )


def dual_cell(word: str) -> str:
    """Inclusion-reversing bijection from proper cube faces to cross faces.

    A k-face of the n-cube goes to an (n-1-k)-face of the cross-polytope.
    """
    if not word or any(ch not in _CUBE_TO_CROSS for ch in word):
        raise ValueError(f"not a cube face word: {word!r}")
    if set(word) == {"*"}:
        raise ValueError("the top cell of the cube has no dual face")
    return "".join(_CUBE_TO_CROSS[ch] for ch in word)


def dual_cell_inverse(word: str) -> str:
    if not word or any(ch not in _CROSS_TO_CUBE for ch in word):
        raise ValueError(f"not a cross-polytope face word: {word!r}")
    if set(word) == {"0"}:
        raise ValueError("the empty face is not a cell")
    return "".join(_CROSS_TO_CUBE[ch] for ch in word)
