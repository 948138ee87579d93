"""
Comb arrangements
=================

Offsets drawn from finite sets. When no difference repeats across k of
the sets, the arrangement behaves like a pile of cubes.
"""

from cubetrees import (
    comb_to_pile,
    detect_k_dependence,
    pile_chi_identity,
    random_generic_comb,
    verify_comb_theorem,
)
from cubetrees.comb import KDependenceError, comb_from_sets

cfg = random_generic_comb((2, 3, 2, 1), 3, seed=5)
print("sets:", [[str(x) for x in s] for s in cfg.sets])
print("pile sizes:", comb_to_pile(cfg))

report = verify_comb_theorem(cfg)
print("tree size", report.tree_size, "skeleton betti", report.skeleton_betti,
      "chi formula", report.chi_beta)

# the Euler characteristic identity on the pile itself
chi = pile_chi_identity(comb_to_pile(cfg), 3)
print("chi:", chi.lhs, "=", chi.rhs)

# the difference 1 appears in three sets, so this one is rejected
bad = comb_from_sets([[0, 1], [0, 2], [5, 6, 8], [3, 4]], 3)
print("witness:", detect_k_dependence(bad).to_dict())
try:
    verify_comb_theorem(bad)
except KDependenceError as err:
    print("rejected:", err)
