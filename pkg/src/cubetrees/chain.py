"""Integer chain complexes of finite regular CW complexes.

A :class:`ChainComplex` stores its cells grouped by dimension, each group
sorted by label, together with one sparse integer boundary matrix per
positive degree.  Rows of ``boundary(i)`` are indexed by the (i-1)-cells and
columns by the i-cells.  Complexes are treated as immutable values: every
operation here returns a new complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Cell",
    "SparseIntMatrix",
    "ChainComplex",
    "ComplexFormatError",
    "validate_complex",
    "f_vector",
    "euler_characteristic",
    "skeleton",
    "facet_subcomplex",
    "complex_to_dict",
    "complex_from_dict",
    "complex_to_file",
    "complex_from_file",
]


@dataclass(frozen=True, order=True)
class Cell:
    id: str
    dim: int
    label: str


@dataclass(frozen=True, eq=False)
class SparseIntMatrix:
    """A ``rows x cols`` integer matrix holding only its nonzero entries."""

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "entries", {rc: int(v) for rc, v in self.entries.items() if v}
        )

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and dict(
            self.entries
        ) == dict(other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> SparseIntMatrix:
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> SparseIntMatrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], cols: int | None = None):
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if rows else 0
        entries = {}
        for r, row in enumerate(dense):
            if len(row) != cols:
                raise ValueError("ragged dense matrix")
            for c, v in enumerate(row):
                if v:
                    entries[r, c] = int(v)
        return cls(rows, cols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def get(self, r: int, c: int) -> int:
        return self.entries.get((r, c), 0)

    @cached_property
    def column_dicts(self) -> tuple[dict[int, int], ...]:
        cols: list[dict[int, int]] = [{} for _ in range(self.cols)]
        for (r, c), v in sorted(self.entries.items()):
            cols[c][r] = v
        return tuple(cols)

    @cached_property
    def row_dicts(self) -> tuple[dict[int, int], ...]:
        rows: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for (r, c), v in sorted(self.entries.items()):
            rows[r][c] = v
        return tuple(rows)

    def column(self, c: int) -> dict[int, int]:
        return dict(self.column_dicts[c])

    def transpose(self) -> SparseIntMatrix:
        return SparseIntMatrix(
            self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def select_columns(self, keep: Sequence[int]) -> SparseIntMatrix:
        """Column restriction, in the order given by ``keep``."""
        entries = {}
        for new_c, old_c in enumerate(keep):
            for r, v in self.column_dicts[old_c].items():
                entries[r, new_c] = v
        return SparseIntMatrix(self.rows, len(keep), entries)

    def select_rows(self, keep: Sequence[int]) -> SparseIntMatrix:
        return self.transpose().select_columns(keep).transpose()

    def __matmul__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict[tuple[int, int], int] = {}
        right_rows = other.row_dicts
        for (r, k), a in self.entries.items():
            for c, b in right_rows[k].items():
                out[r, c] = out.get((r, c), 0) + a * b
        return SparseIntMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not self.entries


class ComplexFormatError(ValueError):
    """Raised when a complex description cannot be parsed."""


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Cells per dimension plus boundary matrices ``boundary(1..top_dim)``.

    Build instances with :meth:`from_cells`, which sorts cells by label and
    assembles the matrices.  The raw constructor performs no checking so that
    :func:`validate_complex` can report on malformed data.
    """

    top_dim: int
    cells: tuple[tuple[Cell, ...], ...]
    boundaries: tuple[SparseIntMatrix, ...]

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return (
            self.top_dim == other.top_dim
            and self.cells == other.cells
            and self.boundaries == other.boundaries
        )

    def __hash__(self):
        return hash((self.top_dim, self.cells))

    def __repr__(self):
        return f"ChainComplex(top_dim={self.top_dim}, f={f_vector(self)})"

    @classmethod
    def from_cells(
        cls,
        cells: Iterable[Cell],
        boundary: Mapping[str, Iterable[tuple[str, int]]],
        top_dim: int | None = None,
    ) -> ChainComplex:
        """Assemble a complex from cells and per-cell boundary chains.

        ``boundary`` maps a cell id to ``(face id, coefficient)`` pairs; cells
        missing from it have zero boundary.  Repeated faces are summed.
        """
        cells = list(cells)
        if top_dim is None:
            top_dim = max((c.dim for c in cells), default=0)
        by_dim: list[list[Cell]] = [[] for _ in range(top_dim + 1)]
        seen = set()
        for cell in cells:
            if cell.id in seen:
                raise ComplexFormatError(f"duplicate cell id {cell.id!r}")
            seen.add(cell.id)
            if not 0 <= cell.dim <= top_dim:
                raise ComplexFormatError(
                    f"cell {cell.id!r} has dim {cell.dim} outside 0..{top_dim}"
                )
            by_dim[cell.dim].append(cell)
        for group in by_dim:
            group.sort(key=lambda c: (c.label, c.id))
        index = {c.id: (c.dim, i) for d in by_dim for i, c in enumerate(d)}

        mats = []
        for d in range(1, top_dim + 1):
            entries: dict[tuple[int, int], int] = {}
            for col, cell in enumerate(by_dim[d]):
                for face_id, coef in boundary.get(cell.id, ()):
                    if face_id not in index:
                        raise ComplexFormatError(
                            f"boundary of {cell.id!r} references unknown cell {face_id!r}"
                        )
                    fdim, row = index[face_id]
                    if fdim != d - 1:
                        raise ComplexFormatError(
                            f"boundary of {cell.id!r} (dim {d}) references "
                            f"{face_id!r} of dim {fdim}"
                        )
                    entries[row, col] = entries.get((row, col), 0) + int(coef)
            mats.append(SparseIntMatrix(len(by_dim[d - 1]), len(by_dim[d]), entries))
        for cell in by_dim[0]:
            if any(True for _ in boundary.get(cell.id, ())):
                raise ComplexFormatError(f"0-cell {cell.id!r} has a nonempty boundary")
        return cls(top_dim, tuple(tuple(g) for g in by_dim), tuple(mats))

    @cached_property
    def _index(self) -> dict[str, tuple[int, int]]:
        return {c.id: (c.dim, i) for group in self.cells for i, c in enumerate(group)}

    @cached_property
    def _label_index(self) -> dict[str, str]:
        return {c.label: c.id for group in self.cells for c in group}

    def cells_of(self, dim: int) -> tuple[Cell, ...]:
        if 0 <= dim <= self.top_dim:
            return self.cells[dim]
        return ()

    def count(self, dim: int) -> int:
        return len(self.cells_of(dim))

    def boundary(self, dim: int) -> SparseIntMatrix:
        """The matrix of the boundary map from ``dim``-chains to ``dim - 1``-chains.

        Degrees outside ``1..top_dim`` give the appropriate zero matrix.
        """
        if 1 <= dim <= self.top_dim:
            return self.boundaries[dim - 1]
        return SparseIntMatrix.zeros(self.count(dim - 1), self.count(dim))

    def locate(self, cell_id: str) -> tuple[int, int]:
        """Return ``(dim, position)`` of a cell, raising ``KeyError`` if absent."""
        return self._index[cell_id]

    def cell(self, cell_id: str) -> Cell:
        d, i = self.locate(cell_id)
        return self.cells[d][i]

    def __contains__(self, cell_id) -> bool:
        return cell_id in self._index

    def resolve(self, token: str) -> str:
        """Map a cell id or label to the cell id."""
        if token in self._index:
            return token
        if token in self._label_index:
            return self._label_index[token]
        raise KeyError(f"no cell with id or label {token!r}")

    def boundary_chain(self, cell_id: str) -> list[tuple[str, int]]:
        d, i = self.locate(cell_id)
        if d == 0:
            return []
        faces = self.cells[d - 1]
        return [(faces[r].id, v) for r, v in self.boundary(d).column_dicts[i].items()]


def validate_complex(c: ChainComplex) -> list[str]:
    """List every violated structural invariant of ``c``; empty means valid."""
    problems = []
    if c.top_dim < 0:
        return [f"top_dim {c.top_dim} is negative"]
    if len(c.cells) != c.top_dim + 1:
        problems.append(
            f"expected {c.top_dim + 1} cell groups, found {len(c.cells)}"
        )
    if len(c.boundaries) != c.top_dim:
        problems.append(
            f"expected {c.top_dim} boundary matrices, found {len(c.boundaries)}"
        )
    ids = set()
    for d, group in enumerate(c.cells):
        for cell in group:
            if cell.id in ids:
                problems.append(f"duplicate cell id {cell.id!r}")
            ids.add(cell.id)
            if cell.dim != d:
                problems.append(f"cell {cell.id!r} of dim {cell.dim} stored at dim {d}")
        keys = [(cell.label, cell.id) for cell in group]
        if keys != sorted(keys):
            problems.append(f"dim {d} cells are not sorted by label")
    if problems:
        return problems
    for d in range(1, c.top_dim + 1):
        m = c.boundaries[d - 1]
        want = (len(c.cells[d - 1]), len(c.cells[d]))
        if m.shape != want:
            problems.append(f"boundary {d} has shape {m.shape}, expected {want}")
            continue
        for (r, col), v in m.entries.items():
            if not (0 <= r < m.rows and 0 <= col < m.cols):
                problems.append(f"boundary {d} entry ({r}, {col}) out of range")
            elif v == 0:
                problems.append(f"boundary {d} stores a zero at ({r}, {col})")
    if problems:
        return problems
    for d in range(2, c.top_dim + 1):
        if not (c.boundaries[d - 2] @ c.boundaries[d - 1]).is_zero():
            problems.append(f"boundary {d - 1} o boundary {d} is nonzero")
    return problems


def f_vector(c: ChainComplex) -> tuple[int, ...]:
    return tuple(len(group) for group in c.cells)


def euler_characteristic(c: ChainComplex) -> int:
    return sum((-1) ** i * f for i, f in enumerate(f_vector(c)))


def skeleton(c: ChainComplex, k: int) -> ChainComplex:
    """Cells of dimension at most ``k``."""
    if not 0 <= k <= c.top_dim:
        raise ValueError(f"skeleton dimension {k} outside 0..{c.top_dim}")
    if k == c.top_dim:
        return c
    return ChainComplex(k, c.cells[: k + 1], c.boundaries[:k])


def facet_subcomplex(c: ChainComplex, facet_ids: Iterable[str]) -> ChainComplex:
    """Full (d-1)-skeleton of ``c`` together with the named top cells.

    With no facets the result is the (d-1)-skeleton itself.
    """
    d = c.top_dim
    wanted = set(facet_ids)
    keep = []
    for cid in wanted:
        if cid not in c:
            raise KeyError(f"unknown cell {cid!r}")
        dim, i = c.locate(cid)
        if dim != d:
            raise ValueError(f"cell {cid!r} has dim {dim}, not the top dim {d}")
        keep.append(i)
    if not keep:
        if d == 0:
            raise ValueError("cannot drop every cell of a 0-dimensional complex")
        return skeleton(c, d - 1)
    keep.sort()
    top = tuple(c.cells[d][i] for i in keep)
    mats = c.boundaries[:-1]
    if d > 0:
        mats = mats + (c.boundaries[-1].select_columns(keep),)
    return ChainComplex(d, c.cells[:-1] + (top,), mats)


# -- JSON interchange --------------------------------------------------------

_SAFE_INT = 2**53


def _encode_int(v: int):
    return v if -_SAFE_INT < v < _SAFE_INT else str(v)


def _decode_int(v, where: str) -> int:
    if isinstance(v, bool):
        raise ComplexFormatError(f"{where}: expected an integer, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v, 10)
        except ValueError:
            pass
    raise ComplexFormatError(f"{where}: expected an integer, got {v!r}")


def complex_to_dict(c: ChainComplex) -> dict:
    cells = []
    for group in c.cells:
        for cell in group:
            cells.append(
                {
                    "id": cell.id,
                    "dim": cell.dim,
                    "label": cell.label,
                    "boundary": [[f, _encode_int(v)] for f, v in c.boundary_chain(cell.id)],
                }
            )
    return {"top_dim": c.top_dim, "cells": cells}


def complex_from_dict(data) -> ChainComplex:
    if not isinstance(data, dict):
        raise ComplexFormatError("top level must be an object")
    for key in ("top_dim", "cells"):
        if key not in data:
            raise ComplexFormatError(f"missing top-level field {key!r}")
    top_dim = _decode_int(data["top_dim"], "top_dim")
    if not isinstance(data["cells"], list):
        raise ComplexFormatError("'cells' must be an array")
    cells, boundary = [], {}
    for n, entry in enumerate(data["cells"]):
        where = f"cells[{n}]"
        if not isinstance(entry, dict):
            raise ComplexFormatError(f"{where}: expected an object")
        for key in ("id", "dim", "label", "boundary"):
            if key not in entry:
                raise ComplexFormatError(f"{where}: missing field {key!r}")
        if not isinstance(entry["id"], str) or not isinstance(entry["label"], str):
            raise ComplexFormatError(f"{where}: 'id' and 'label' must be strings")
        dim = _decode_int(entry["dim"], f"{where}.dim")
        chain = []
        if not isinstance(entry["boundary"], list):
            raise ComplexFormatError(f"{where}.boundary: expected an array")
        for m, pair in enumerate(entry["boundary"]):
            if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], str)):
                raise ComplexFormatError(
                    f"{where}.boundary[{m}]: expected [cell-id, coefficient]"
                )
            chain.append((pair[0], _decode_int(pair[1], f"{where}.boundary[{m}][1]")))
        cells.append(Cell(entry["id"], dim, entry["label"]))
        boundary[entry["id"]] = chain
    return ChainComplex.from_cells(cells, boundary, top_dim=top_dim)


def complex_to_file(c: ChainComplex, path) -> None:
    text = json.dumps(complex_to_dict(c), indent=1, ensure_ascii=False)
    Path(path).write_text(text + "\n", encoding="utf-8")


def complex_from_file(path) -> ChainComplex:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return complex_from_dict(data)
