"""Comb no-k-equal arrangements and the pile of cubes they determine.

Only the cardinalities of the offset sets reach the topology.  The values
matter through the genericity hypothesis: no nonzero difference may be
realized inside k of the sets on pairwise distinct axes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .builders import pile_of_cubes
from .chain import skeleton
from .formulas import pile_chi_identity
from .homology import betti_number
from .trees import build_tree

__all__ = [
    "CombConfig",
    "DependenceWitness",
    "KDependenceError",
    "GenerationError",
    "parse_sets",
    "detect_k_dependence",
    "random_generic_comb",
    "comb_to_pile",
    "CombReport",
    "verify_comb_theorem",
    "comb_from_sets",
]


@dataclass(frozen=True)
class CombConfig:
    sets: tuple[tuple[Fraction, ...], ...]
    k: int

    def __post_init__(self):
        clean = []
        for j, values in enumerate(self.sets):
            vals = [Fraction(v) for v in values]
            if not vals:
                raise ValueError(f"offset set {j} is empty")
            if len(set(vals)) != len(vals):
                raise ValueError(f"offset set {j} has repeated values")
            clean.append(tuple(sorted(vals)))
        object.__setattr__(self, "sets", tuple(clean))
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if len(self.sets) < self.k:
            raise ValueError(f"need at least k={self.k} axes, got {len(self.sets)}")

    @property
    def n(self) -> int:
        return len(self.sets)

    def to_dict(self) -> dict:
        return {"k": self.k, "sets": [[str(v) for v in s] for s in self.sets]}


def parse_sets(text: str) -> list[list[Fraction]]:
    """Parse ``"0,1;0,1/2;3"`` into one list of rationals per axis."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty axis in {text!r}")
        out.append([Fraction(tok.strip()) for tok in chunk.split(",")])
    return out


@dataclass(frozen=True)
class DependenceWitness:
    difference: Fraction
    pairs: tuple[tuple[int, Fraction, Fraction], ...]  # (axis, x, x') with x - x' = difference

    def validates(self, cfg: CombConfig) -> bool:
        axes = [a for a, _, _ in self.pairs]
        return (
            self.difference != 0
            and len(self.pairs) >= cfg.k
            and len(set(axes)) == len(axes)
            and all(
                0 <= a < cfg.n
                and x in cfg.sets[a]
                and y in cfg.sets[a]
                and x - y == self.difference
                for a, x, y in self.pairs
            )
        )

    def to_dict(self) -> dict:
        return {
            "difference": str(self.difference),
            "pairs": [[a, str(x), str(y)] for a, x, y in self.pairs],
        }


class KDependenceError(ValueError):
    def __init__(self, witness: DependenceWitness):
        super().__init__(
            f"offset sets have a k-dependence with difference {witness.difference}"
        )
        self.witness = witness


class GenerationError(RuntimeError):
    pass


def detect_k_dependence(cfg: CombConfig) -> DependenceWitness | None:
    """A k-dependence witness, or None when the configuration is generic.

    Pairs are unordered, so each is oriented to a positive difference; a
    difference occurring on k or more axes is a dependence.
    """
    axes_by_diff: dict[Fraction, dict[int, tuple[Fraction, Fraction]]] = {}
    for j, values in enumerate(cfg.sets):
        for a, lo in enumerate(values):
            for hi in values[a + 1 :]:
                axes_by_diff.setdefault(hi - lo, {}).setdefault(j, (hi, lo))
    for d in sorted(axes_by_diff):
        hits = axes_by_diff[d]
        if len(hits) >= cfg.k:
            axes = sorted(hits)[: cfg.k]
            return DependenceWitness(d, tuple((a, *hits[a]) for a in axes))
    return None


def random_generic_comb(
    sizes: Sequence[int],
    k: int,
    seed=None,
    max_tries: int = 1000,
    value_range: int = 10**6,
    max_denominator: int = 997,
) -> CombConfig:
    """Rejection-sample offset sets with the given sizes and no k-dependence.

    Values are ``p / q`` with ``|p| <= value_range`` and
    ``1 <= q <= max_denominator``.
    """
    if any(s > (2 * value_range + 1) * max_denominator for s in sizes):
        raise ValueError("value range too small for the requested set sizes")
    rng = random.Random(seed)
    for _ in range(max_tries):
        sets = []
        for s in sizes:
            vals: set[Fraction] = set()
            while len(vals) < s:
                vals.add(
                    Fraction(
                        rng.randint(-value_range, value_range),
                        rng.randint(1, max_denominator),
                    )
                )
            sets.append(tuple(vals))
        cfg = CombConfig(tuple(sets), k)
        if detect_k_dependence(cfg) is None:
            return cfg
    raise GenerationError(f"no generic configuration found in {max_tries} tries")


def comb_to_pile(cfg: CombConfig) -> tuple[int, ...]:
    """Pile sizes: one unit cube per element of each offset set."""
    return tuple(len(s) for s in cfg.sets)


@dataclass(frozen=True)
class CombReport:
    sizes: tuple[int, ...]
    k: int
    tree_size: int  # facets of a k-tree of the pile's k-skeleton
    skeleton_betti: int  # reduced b_{k-1} of the (k-1)-skeleton
    chi_beta: int  # from the Euler characteristic identity
    chi_lhs: int
    chi_rhs: int

    @property
    def all_equal(self) -> bool:
        return self.tree_size == self.skeleton_betti == self.chi_beta and self.chi_lhs == self.chi_rhs

    @property
    def value(self) -> int | None:
        return self.tree_size if self.all_equal else None

    def to_dict(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "k": self.k,
            "tree_size": self.tree_size,
            "skeleton_betti": self.skeleton_betti,
            "chi_beta": self.chi_beta,
            "chi_lhs": self.chi_lhs,
            "chi_rhs": self.chi_rhs,
            "all_equal": self.all_equal,
            "value": self.value,
        }


def verify_comb_theorem(cfg: CombConfig) -> CombReport:
    """Compute the rank of H_{k-2} of the comb complement three ways.

    Raises :class:`KDependenceError` when the genericity hypothesis fails.
    """
    if cfg.k < 3:
        raise ValueError("the comb identity needs k >= 3")
    witness = detect_k_dependence(cfg)
    if witness is not None:
        raise KDependenceError(witness)
    sizes = comb_to_pile(cfg)
    k = cfg.k
    pile = pile_of_cubes(sizes)
    tree = build_tree(skeleton(pile, k))
    hb = betti_number(skeleton(pile, k - 1), k - 1, reduced=True)
    chi = pile_chi_identity(sizes, k)
    return CombReport(
        sizes=sizes,
        k=k,
        tree_size=len(tree),
        skeleton_betti=hb,
        chi_beta=chi.beta,
        chi_lhs=chi.lhs,
        chi_rhs=chi.rhs,
    )


def comb_from_sets(sets: Iterable[Iterable], k: int) -> CombConfig:
    return CombConfig(tuple(tuple(Fraction(v) for v in s) for s in sets), k)
