"""End-to-end checks of the cube tree / no-k-equal identity.

For each ``3 <= k <= n`` five quantities are computed independently:

``q_tree``
    facets of a greedy k-spanning tree of the k-skeleton of the n-cube;
``q_formula``
    the binomial sum for the tree size;
``q_skel``
    reduced b_{k-1} of the (k-1)-skeleton of the n-cube;
``q_dual``
    reduced b_{n-k-1} of the (n-k-1)-skeleton of the cross-polytope
    boundary (absent when ``k == n``);
``q_bw``
    the Bjorner-Welker Betti number of the no-k-equal space.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .builders import cross_polytope, hypercube
from .chain import skeleton
from .formulas import bw_betti, tree_size_closed_form
from .homology import betti_number
from .trees import build_tree

__all__ = [
    "Theorem1Report",
    "verify_theorem1",
    "sweep",
    "CSV_FIELDS",
    "reports_to_json",
    "reports_to_csv",
    "DEFAULT_CELL_CAP",
    "DEFAULT_TIME_CAP",
    "WORKERS_ENV",
]

DEFAULT_CELL_CAP = 200_000
DEFAULT_TIME_CAP = 600.0
WORKERS_ENV = "CUBETREES_WORKERS"

CSV_FIELDS = (
    "n",
    "k",
    "q_tree",
    "q_formula",
    "q_skel",
    "q_dual",
    "q_bw",
    "all_equal",
    "status",
)


@dataclass(frozen=True)
class Theorem1Report:
    n: int
    k: int
    q_tree: int | None
    q_formula: int | None
    q_skel: int | None
    q_dual: int | None
    q_bw: int | None
    status: str = "ok"
    elapsed: float = 0.0

    @property
    def values(self) -> list[int]:
        return [
            q
            for q in (self.q_tree, self.q_formula, self.q_skel, self.q_dual, self.q_bw)
            if q is not None
        ]

    @property
    def all_equal(self) -> bool:
        vals = self.values
        return self.status == "ok" and len(set(vals)) == 1

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "q_tree": self.q_tree,
            "q_formula": self.q_formula,
            "q_skel": self.q_skel,
            "q_dual": self.q_dual,
            "q_bw": self.q_bw,
            "all_equal": self.all_equal,
            "status": self.status,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def verify_theorem1(
    n: int,
    k: int,
    cell_cap: int = DEFAULT_CELL_CAP,
    time_cap: float = DEFAULT_TIME_CAP,
) -> Theorem1Report:
    """Compute the five quantities for one ``(n, k)``.

    A cube with more than ``cell_cap`` cells is skipped outright; exceeding
    ``time_cap`` seconds between steps stops the computation and returns
    whatever was already known.
    """
    if not 3 <= k <= n:
        raise ValueError(f"need 3 <= k <= n, got n={n}, k={k}")
    start = time.perf_counter()
    found: dict[str, int | None] = dict(
        q_tree=None, q_formula=None, q_skel=None, q_dual=None, q_bw=None
    )
    found["q_formula"] = tree_size_closed_form(n, k)
    found["q_bw"] = bw_betti(n, k)

    def report(status):
        return Theorem1Report(n, k, status=status, elapsed=time.perf_counter() - start, **found)

    if 3**n > cell_cap:
        return report("skipped: cap")
    cube = hypercube(n)
    steps = [
        ("q_tree", lambda: len(build_tree(skeleton(cube, k)))),
        ("q_skel", lambda: betti_number(skeleton(cube, k - 1), k - 1, reduced=True)),
    ]
    if k < n:
        j = n - k - 1
        steps.append(
            ("q_dual", lambda: betti_number(skeleton(cross_polytope(n), j), j, reduced=True))
        )
    for name, step in steps:
        if time.perf_counter() - start > time_cap:
            return report("skipped: cap")
        found[name] = step()
    return report("ok")


def _cell(args):
    n, k, cell_cap, time_cap = args
    return verify_theorem1(n, k, cell_cap, time_cap)


def sweep(
    n_max: int,
    k_min: int = 3,
    workers: int | None = None,
    cell_cap: int = DEFAULT_CELL_CAP,
    time_cap: float = DEFAULT_TIME_CAP,
) -> list[Theorem1Report]:
    """One report per ``k_min <= k <= n <= n_max``, ordered by ``(n, k)``.

    ``workers`` defaults to the ``CUBETREES_WORKERS`` environment variable,
    else 1 (in-process).
    """
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    k_min = max(k_min, 3)
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    jobs = [
        (n, k, cell_cap, time_cap)
        for n in range(3, n_max + 1)
        for k in range(k_min, n + 1)
    ]
    if workers <= 1:
        return [_cell(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order regardless of completion order
        return list(pool.map(_cell, jobs))


def reports_to_json(reports: Sequence, timings: bool = False) -> str:
    return json.dumps(
        [r.to_dict(timings) if isinstance(r, Theorem1Report) else r.to_dict() for r in reports],
        indent=2,
    )


def reports_to_csv(reports: Sequence[Theorem1Report], timings: bool = False) -> str:
    fields = list(CSV_FIELDS) + (["elapsed"] if timings else [])
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = r.to_dict(timings)
        writer.writerow({k: "" if row[k] is None else row[k] for k in fields})
    return buf.getvalue()
