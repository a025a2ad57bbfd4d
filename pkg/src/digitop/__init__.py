"""digitop: digital images on the integer lattice and their product adjacencies.

Construct finite digital images, equip them and their Cartesian products with
c_u, normal-product, tensor, Cartesian and lexicographic adjacencies, and
decide continuity, connectivity, homotopy, retraction, shyness, approximate
fixed points and multivalued continuity, with a theorem-check harness that
replays worked fixtures and property-tests the supporting claims at desk
scale.
"""

from .adjacency import (
    Adjacency,
    AdjacencyBindError,
    AdjacencySyntaxError,
    Cartesian,
    Cu,
    Lex,
    NP,
    ProductSpec,
    Tensor,
    adjacent,
    bind,
    cu,
    dominates,
    parse_adjacency,
    print_adjacency,
    product_adjacency,
    product_image,
    split_point,
)
from .homotopy import (
    HomotopyEquivalence,
    HomotopyWitness,
    are_homotopic,
    holds_fixed,
    homotopy_equivalent,
    is_homotopy,
    lex_collapse_homotopy,
    neighbor_shift,
    staged_product_homotopy,
)
from .lattice import (
    DigitalImage,
    Point,
    box,
    components,
    connected_subsets,
    cu_adjacent,
    find_path,
    interval,
    is_connected,
    is_connected_set,
    neighborhood,
    sets_adjacent,
)
from .maps import (
    DigitalMap,
    Verdict,
    approximate_fixed_point,
    compose,
    constant_map,
    continuous_maps,
    coordinate_permutation_map,
    exists_isomorphism,
    exists_retraction,
    has_afpp,
    identity_map,
    injection,
    inverse_map,
    is_continuous,
    is_isomorphism,
    is_locally_one_to_one,
    is_retraction,
    is_shy,
    product_map,
    projection,
)
from .multivalued import (
    MultiMap,
    ShyReport,
    Subdivision,
    has_strong_continuity,
    has_weak_continuity,
    induced_multimap,
    inverse_multimap,
    is_connectivity_preserving,
    is_continuous_multimap,
    is_multivalued_retraction,
    multimap_from_map,
    product_multimap,
    shy_equivalences,
    subdivide,
)
from .search import Budget, SearchBudgetExceeded

__version__ = "0.1.0"
