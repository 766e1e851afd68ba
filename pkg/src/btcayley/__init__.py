"""Cayley graphs of the symmetric group over the block transpositions.

The package builds the generating set T_n of all block transpositions,
the graph induced on it, the toric and reversal symmetries, the rotation
systems whose faces realize the cyclic relations, and the automorphism
groups of all of these.  Every structural fact carries a runnable check
in the claim registry (btcayley.verify); the command line front end in
btcayley.cli drives the same registry.
"""

from .blocktrans import (
    IDENTITY,
    TN_CLASSES,
    CutPoints,
    beta,
    bt_inverse,
    bt_power,
    classify,
    enumerate_tn,
    make_bt,
    partition_counts,
    recognize,
    tn_realizations,
    tn_size,
)
from .budget import NO_BUDGET, Budget, BudgetExceeded
from .graphs import (
    Graph,
    bfs_distance,
    build_cayley,
    degree_profile,
    e_edges,
    gamma,
    gamma_v,
    graphs_isomorphic,
    hamilton_cycle_gamma_v,
    maximal_2_cliques,
    vertex_set_V,
)
from .maps import (
    CayleyMap,
    aut_order,
    build_map,
    is_regular,
    map_report,
    mprime_n5_map,
    octahedron_map,
    prop72_map,
    t_balance,
)
from .perms import (
    ExtendedPermutation,
    Permutation,
    identity,
    lift,
    parse_permutation,
    restrict,
    reverse,
    sym_group,
)
from .toric import (
    DihedralElement,
    SkewMorphismWitness,
    apply_dihedral,
    bar_f,
    bar_f_witness,
    dihedral_elements,
    euler_phi,
    reverse_g,
    toric_class,
    toric_class_stats,
    toric_f,
)
from .verify import (
    Claim,
    ClaimFailure,
    VerificationReport,
    claim_keys,
    run_all,
    run_claim,
)
from .autgroup import (
    VertexMap,
    aut_group,
    generated_subgroup,
    is_automorphism,
    left_translation,
    stabilizer_of_identity,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceeded",
    "CayleyMap",
    "Claim",
    "ClaimFailure",
    "CutPoints",
    "DihedralElement",
    "ExtendedPermutation",
    "Graph",
    "IDENTITY",
    "NO_BUDGET",
    "Permutation",
    "SkewMorphismWitness",
    "TN_CLASSES",
    "VerificationReport",
    "VertexMap",
    "apply_dihedral",
    "aut_group",
    "aut_order",
    "bar_f",
    "bar_f_witness",
    "beta",
    "bfs_distance",
    "bt_inverse",
    "bt_power",
    "build_cayley",
    "build_map",
    "classify",
    "claim_keys",
    "degree_profile",
    "dihedral_elements",
    "e_edges",
    "enumerate_tn",
    "euler_phi",
    "gamma",
    "gamma_v",
    "generated_subgroup",
    "graphs_isomorphic",
    "hamilton_cycle_gamma_v",
    "identity",
    "is_automorphism",
    "is_regular",
    "left_translation",
    "lift",
    "make_bt",
    "map_report",
    "maximal_2_cliques",
    "mprime_n5_map",
    "octahedron_map",
    "parse_permutation",
    "partition_counts",
    "prop72_map",
    "recognize",
    "restrict",
    "reverse",
    "reverse_g",
    "run_all",
    "run_claim",
    "stabilizer_of_identity",
    "sym_group",
    "t_balance",
    "tn_realizations",
    "tn_size",
    "toric_class",
    "toric_class_stats",
    "toric_f",
    "vertex_set_V",
]
