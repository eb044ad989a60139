"""Exact combinatorics of Bruhat intervals, Bruhat interval polytopes,
and the torus complexity of Schubert varieties.

Everything is computed in integer and rational arithmetic:

- permutation statistics: lengths, supports, pattern counts, the
  complexity length(w) - |support(w)|, reduced words and the braid
  factors characterizing complexity one;
- Bruhat order: comparisons, intervals with Hasse covers, rank
  polynomials, reference posets and poset isomorphism;
- Bruhat interval polytopes: exact hulls, facets, face lattices,
  f-vectors, products and combinatorial equivalence;
- the transposition-graph face criterion for subinterval polytopes;
- Bott matrices, interval sequences, flag-tower integer vectors and
  cohomology presentations for smooth complexity-one permutations;
- classification reports and exhaustive verification sweeps.
"""

from .classification import ClassificationReport, SuiteReport, classify, sweep
from .facegraph import enumerate_faces, face_graph, is_face
from .geometry import (
    LatticePolytope,
    bip_vertices,
    bruhat_interval_polytope,
    combinatorially_equivalent,
    f_vector,
    face_lattice,
    hull,
    product_polytope,
)
from .perms import (
    Perm,
    Word,
    complexity,
    compose,
    count_pattern,
    find_single_repetition_factor,
    inverse,
    is_smooth,
    length,
    pattern_profile,
    reduced_words,
    support,
)
from .posets import (
    AbstractPoset,
    BruhatInterval,
    boolean_algebra,
    bruhat_leq,
    interval,
    interval_factorization,
    poset_isomorphic,
    product,
    rank_polynomial,
)
from .towers import (
    bott_matrix,
    cohomology_presentation,
    flag_tower_vectors,
    interval_sequence,
    partition_presentation,
    verify_substitution_identity,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractPoset",
    "BruhatInterval",
    "ClassificationReport",
    "LatticePolytope",
    "Perm",
    "SuiteReport",
    "Word",
    "bip_vertices",
    "boolean_algebra",
    "bott_matrix",
    "bruhat_interval_polytope",
    "bruhat_leq",
    "classify",
    "cohomology_presentation",
    "combinatorially_equivalent",
    "complexity",
    "compose",
    "count_pattern",
    "enumerate_faces",
    "f_vector",
    "face_graph",
    "face_lattice",
    "find_single_repetition_factor",
    "flag_tower_vectors",
    "hull",
    "interval",
    "interval_factorization",
    "interval_sequence",
    "inverse",
    "is_face",
    "is_smooth",
    "length",
    "partition_presentation",
    "pattern_profile",
    "poset_isomorphic",
    "product",
    "product_polytope",
    "rank_polynomial",
    "reduced_words",
    "support",
    "sweep",
    "verify_substitution_identity",
]
