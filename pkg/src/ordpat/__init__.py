"""ordpat: pattern containment, avoidance enumeration, and extremal search
on ordered combinatorial structures (permutations, ordered graphs and
hypergraphs, partitions, 0/1 matrices)."""

from .errors import FeasibilityError, ParseError, StructureError, UnrealizableError
from .structures import (
    BinaryMatrix,
    OrderedHypergraph,
    Partition,
    PatternClass,
    Permutation,
    Witness,
    all_permutations,
    canonical_pattern,
    complete_bipartite,
    complete_graph,
    empty_bipartite,
    hypergraph_of_partition,
    incidence_matrix,
    is_comatching,
    is_starmatching,
    make_g,
    make_h_of_pi,
    s1_matrix,
    s2_matrix,
    satisfies_k_l,
    standard_object,
    two_degree,
    weight,
)
from .containment import (
    hg_contains,
    hg_contains_perm,
    hg_induced_sub,
    is_induced_sub,
    is_sub_hypergraph,
    matrix_contains,
    matrix_contains_class,
    partition_contains,
    perm_contains,
    sub_partition,
    verify_class_witness,
    verify_hg_perm_witness,
    verify_matrix_witness,
    verify_perm_witness,
)
from .transforms import (
    BracketSeq,
    DegreeSequence,
    block_compress,
    contract_pairs,
    corner_pattern,
    extract_independent_matching,
    greedy_star_matching,
    incidence_reduction,
    lift_block_witness,
    pair_graph_reduction,
    phi_deg1,
    phi_triple,
    psi_brackets,
    reconstruct_deg1,
    reconstruct_triple,
    sigma_double,
    translate_corner_witness,
    translate_incidence_witness,
)
from .formulas import (
    ConstantsRecord,
    c_bound,
    c_one,
    catalan,
    constants,
    double_factorial_odd,
    f_recurrence_bound,
    g_d,
    lb_formula,
    telephone,
)
from .enumeration import (
    PropertySpec,
    SpeedTable,
    bipartite_ramsey_find,
    count_structures,
    enumerate_structures,
    extremal_ones,
    extremal_ones_oracle,
    g_family,
    g_family_speed,
    max_weight_avoiding,
    ramsey_find,
    satisfies_spec,
    speed_table,
)

__version__ = "0.1.0"
