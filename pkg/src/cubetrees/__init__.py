"""Exact cellular homology and spanning trees of cubes, cross-polytopes
and piles of cubes, with checks of the tree-size / no-k-equal identities."""

__version__ = "0.1.0"

from .builders import (
    cross_polytope,
    dual_cell,
    dual_cell_inverse,
    hypercube,
    pile_of_cubes,
)
from .chain import (
    Cell,
    ChainComplex,
    ComplexFormatError,
    SparseIntMatrix,
    complex_from_file,
    complex_to_file,
    euler_characteristic,
    f_vector,
    facet_subcomplex,
    skeleton,
    validate_complex,
)
from .comb import (
    CombConfig,
    DependenceWitness,
    KDependenceError,
    comb_to_pile,
    detect_k_dependence,
    random_generic_comb,
    verify_comb_theorem,
)
from .formulas import (
    bw_betti,
    equinumerous_quantities,
    pile_chi_identity,
    resolution_added_cell_dim,
    tree_size_closed_form,
)
from .homology import (
    HomologyResult,
    SNFResult,
    betti_number,
    betti_vector,
    homology,
    invariant_factors,
    rank_q,
    smith_normal_form,
)
from .trees import TreeCertificate, TreeError, build_tree, check_tree, dual_tree
from .verify import Theorem1Report, sweep, verify_theorem1
