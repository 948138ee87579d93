"""Exact integer homology.

Two independent routes are provided:

* Smith normal form over the integers (:func:`smith_normal_form` with
  transforms, :func:`invariant_factors` without), which yields ranks and
  torsion;
* fraction-free elimination over the rationals (:class:`IndependenceTracker`,
  :func:`rank_q`), which yields ranks only and is much cheaper.

Reduced homology is obtained by augmenting degree 0 with the all-ones map to
a single copy of the integers in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .chain import ChainComplex, SparseIntMatrix

__all__ = [
    "SNFResult",
    "HomologyResult",
    "smith_normal_form",
    "invariant_factors",
    "IndependenceTracker",
    "rank_q",
    "chain_dim",
    "reduced_boundary",
    "homology",
    "betti_vector",
    "betti_number",
    "ranks_q",
    "determinant",
    "check_snf",
]


@dataclass(frozen=True)
class SNFResult:
    """``U @ A @ V == D`` with ``U`` and ``V`` unimodular."""

    U: SparseIntMatrix
    D: SparseIntMatrix
    V: SparseIntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D.get(i, i) for i in range(min(self.D.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


@dataclass(frozen=True)
class HomologyResult:
    dim: int
    betti: int
    torsion: tuple[int, ...] = field(default=())

    @property
    def is_free(self) -> bool:
        return not self.torsion


# -- Smith normal form -------------------------------------------------------


def smith_normal_form(A: SparseIntMatrix) -> SNFResult:
    """Smith normal form with transforms, by dense elimination.

    Pivots are chosen with minimal absolute value.  Intended for matrices of
    moderate size; use :func:`invariant_factors` when only ``D`` is needed.
    """
    m, n = A.shape
    a = A.to_dense()
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        rs, rd = a[src], a[dst]
        for c in range(n):
            if rs[c]:
                rd[c] += q * rs[c]
        us, ud = u[src], u[dst]
        for c in range(m):
            if us[c]:
                ud[c] += q * us[c]

    def add_col(dst, src, q):
        for row in a:
            if row[src]:
                row[dst] += q * row[src]
        for row in v:
            if row[src]:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            rest = [i for i in range(t + 1, m) if a[i][t]]
            if rest:
                i = min(rest, key=lambda r: abs(a[r][t]))
                swap_rows(t, i)
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            rest = [j for j in range(t + 1, n) if a[t][j]]
            if rest:
                j = min(rest, key=lambda c: abs(a[t][c]))
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(x % p for x in a[i][t + 1 :])), None
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SNFResult(
        SparseIntMatrix.from_dense(u, m),
        SparseIntMatrix.from_dense(a, n),
        SparseIntMatrix.from_dense(v, n),
    )


def _normalize_diagonal(diag: Iterable[int]) -> list[int]:
    """Turn any nonzero diagonal into invariant factors d1 | d2 | ..."""
    diag = [abs(d) for d in diag if d]
    ones = [d for d in diag if d == 1]
    big = sorted(d for d in diag if d != 1)
    for i in range(len(big)):
        for j in range(i + 1, len(big)):
            x, y = big[i], big[j]
            g = gcd(x, y)
            big[i], big[j] = g, x // g * y
    return ones + sorted(big)


def invariant_factors(A: SparseIntMatrix) -> list[int]:
    """Nonzero invariant factors of ``A`` in divisibility order.

    Sparse integer elimination: unit pivots are preferred and chosen to
    limit fill-in; otherwise the pivot of least absolute value is reduced
    Euclid-style until it divides its row and column.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), x in A.entries.items():
        rows.setdefault(r, {})[c] = x
        cols.setdefault(c, set()).add(r)

    def drop_entry(r, c):
        del rows[r][c]
        cs = cols[c]
        cs.discard(r)
        if not cs:
            del cols[c]

    def row_axpy(dst, src, q):
        # row[dst] += q * row[src]
        rd = rows[dst]
        for c, x in rows[src].items():
            y = rd.get(c, 0) + q * x
            if y:
                if c not in rd:
                    cols[c].add(dst)
                rd[c] = y
            elif c in rd:
                del rd[c]
                cols[c].discard(dst)

    def remove_pivot(r, c):
        for cc in list(rows[r]):
            drop_entry(r, cc)
        del rows[r]
        for rr in list(cols.get(c, ())):
            drop_entry(rr, c)

    diag = []
    while True:
        for r in [r for r, row in rows.items() if not row]:
            del rows[r]
        if not rows:
            break
        pick = None
        for r, row in rows.items():
            lr = len(row) - 1
            for c, x in row.items():
                if x == 1 or x == -1:
                    cost = lr * (len(cols[c]) - 1)
                    if pick is None or cost < pick[0]:
                        pick = (cost, r, c)
                        if cost == 0:
                            break
            if pick and pick[0] == 0:
                break
        if pick is not None:
            _, r, c = pick
            p = rows[r][c]
            for rr in list(cols[c]):
                if rr != r:
                    row_axpy(rr, r, -rows[rr][c] * p)
            remove_pivot(r, c)
            diag.append(1)
            continue

        _, r, c = min(
            ((abs(x), r, c) for r, row in rows.items() for c, x in row.items())
        )
        p = rows[r][c]
        dirty = False
        for rr in list(cols[c]):
            if rr != r:
                row_axpy(rr, r, -(rows[rr][c] // p))
                if c in rows[rr]:
                    dirty = True
        if dirty:
            continue
        # column c now holds only the pivot; column operations touch row r only
        prow = rows[r]
        for cc in list(prow):
            if cc == c:
                continue
            y = prow[cc] - (prow[cc] // p) * p
            if y:
                prow[cc] = y
                dirty = True
            else:
                drop_entry(r, cc)
        if dirty:
            continue
        remove_pivot(r, c)
        diag.append(abs(p))
    return _normalize_diagonal(diag)


# -- rank over Q -------------------------------------------------------------


def _primitive(v: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    if g > 1:
        return {k: x // g for k, x in v.items()}
    return v


class IndependenceTracker:
    """Incremental echelon basis over Q, kept in primitive integer form.

    ``add`` reports whether a sparse vector is independent of everything
    accepted so far, and keeps it if so.
    """

    def __init__(self):
        self._basis: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self._basis)

    @property
    def rank(self) -> int:
        return len(self._basis)

    def reduce(self, vec: dict[int, int]) -> dict[int, int]:
        v = {k: x for k, x in vec.items() if x}
        while v:
            lead = min(v)
            b = self._basis.get(lead)
            if b is None:
                break
            bl, vl = b[lead], v[lead]
            g = gcd(bl, vl)
            sb, sv = bl // g, vl // g
            out = {k: sb * x for k, x in v.items()}
            for k, x in b.items():
                y = out.get(k, 0) - sv * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = _primitive(out)
        return v

    def add(self, vec: dict[int, int]) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        self._basis[min(v)] = v
        return True


def rank_q(A: SparseIntMatrix) -> int:
    """Rank over the rationals by fraction-free column elimination."""
    t = IndependenceTracker()
    for col in A.column_dicts:
        if col:
            t.add(col)
    return t.rank


def determinant(M: SparseIntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n, m = M.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    a = M.to_dense()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


# -- homology of complexes ---------------------------------------------------


def chain_dim(c: ChainComplex, i: int, reduced: bool = False) -> int:
    """Rank of the i-th chain group; degree -1 is Z when reduced."""
    if i == -1:
        return 1 if reduced else 0
    return c.count(i)


def reduced_boundary(c: ChainComplex, i: int, reduced: bool = False) -> SparseIntMatrix:
    """Boundary matrix in degree i; with ``reduced`` degree 0 is the augmentation."""
    if i == 0 and reduced:
        return SparseIntMatrix(1, c.count(0), {(0, j): 1 for j in range(c.count(0))})
    if i <= 0:
        return SparseIntMatrix.zeros(chain_dim(c, i - 1, reduced), chain_dim(c, i, reduced))
    return c.boundary(i)


def _check_degree(c: ChainComplex, i: int) -> None:
    if not 0 <= i <= c.top_dim:
        raise ValueError(f"degree {i} outside 0..{c.top_dim}")


def homology(c: ChainComplex, i: int, reduced: bool = False) -> HomologyResult:
    """Betti number and torsion of H_i(c; Z) via invariant factors."""
    _check_degree(c, i)
    out_rank = len(invariant_factors(reduced_boundary(c, i, reduced)))
    factors = invariant_factors(reduced_boundary(c, i + 1, reduced))
    betti = chain_dim(c, i) - out_rank - len(factors)
    return HomologyResult(i, betti, tuple(d for d in factors if d > 1))


def betti_vector(c: ChainComplex, reduced: bool = False) -> list[HomologyResult]:
    return [homology(c, i, reduced) for i in range(c.top_dim + 1)]


def betti_number(c: ChainComplex, i: int, reduced: bool = False) -> int:
    """Rank of H_i from ranks over Q alone (no torsion information)."""
    if i < -1 or i > c.top_dim:
        raise ValueError(f"degree {i} outside -1..{c.top_dim}")
    if i == -1:
        return 0 if not reduced or c.count(0) else 1
    return (
        chain_dim(c, i)
        - rank_q(reduced_boundary(c, i, reduced))
        - rank_q(reduced_boundary(c, i + 1, reduced))
    )


def ranks_q(c: ChainComplex) -> list[int]:
    """``[rank boundary(1), ..., rank boundary(top_dim)]`` over Q."""
    return [rank_q(c.boundary(i)) for i in range(1, c.top_dim + 1)]


def check_snf(A: SparseIntMatrix, res: SNFResult) -> list[str]:
    """Problems with a claimed Smith form of ``A``; empty means correct."""
    problems = []
    if (res.U @ A @ res.V) != res.D:
        problems.append("U @ A @ V != D")
    for (r, c_) in res.D.entries:
        if r != c_:
            problems.append(f"D has off-diagonal entry at ({r}, {c_})")
            break
    diag = res.diagonal
    nz = [d for d in diag if d]
    if any(d < 0 for d in diag):
        problems.append("negative diagonal entry")
    if diag[: len(nz)] != nz:
        problems.append("zeros on the diagonal precede nonzeros")
    if any(nz[i + 1] % nz[i] for i in range(len(nz) - 1)):
        problems.append("diagonal fails divisibility")
    for name, M in (("U", res.U), ("V", res.V)):
        if abs(determinant(M)) != 1:
            problems.append(f"{name} is not unimodular")
    return problems
