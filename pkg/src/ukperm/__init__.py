"""Uniquely k-determined permutations: criteria, counting, prohibitions and posets."""

from .counting import (
    CountTable,
    RationalGF,
    build_transfer_graph,
    count_bruteforce,
    count_via_transfer,
    fit_rational_gf,
    gf_reference_k3,
    series,
)
from .determinacy import (
    WindowPath,
    ir_distribution,
    ir_index,
    is_uniquely_determined,
    is_uniquely_determined_via_inverse,
    key_bijection,
    key_bijection_inverse,
    window_path,
)
from .errors import ConsistencyError, FitFailure, InvalidInput, ResourceLimit
from .overlap import (
    OverlapGraph,
    build_overlap_graph,
    enumerate_paths,
    export_dot,
    reachable,
    realize_path,
)
from .pathscheme import (
    PathScheme,
    bounds,
    build_path_scheme,
    count_hamiltonian_paths,
    enumerate_hamiltonian_paths,
    phi,
    phi_inverse,
)
from .perm import Perm, complement, distance, factor_pattern, inverse, reduce_pattern
from .posets import (
    Poset,
    count_linear_extensions,
    incomparable_pairs,
    m_distribution,
    m_index,
    poset_from_permutation,
)
from .prohibitions import (
    ProhibitionSet,
    contains_prohibition,
    extension_witness,
    find_crucial,
    generate_prohibitions,
    is_irreducible,
)
