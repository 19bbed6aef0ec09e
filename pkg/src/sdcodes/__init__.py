"""Self-dual code constructions from group-ring block matrices.

The package builds binary and F2+uF2 self-dual codes from 2x2 block
generator matrices over group rings, lifts and Gray-maps them, derives
longer codes by extension and neighbour steps, verifies weight-enumerator
parameters exactly, and keeps a catalog of results with provenance.
"""

__version__ = "0.1.0"

from .algebra import (
    BinaryCode,
    BitMatrix,
    BitVector,
    RingCode,
    RingVector,
    euclidean_inner,
    format_code,
    gf2_mul,
    gf2_rref,
    gray_image,
    gray_map,
    is_self_dual,
    lee_distance_min,
    parse_code,
    projection,
    ring_inner,
)
from .analysis import (
    EnumeratorParams,
    WeightProfile,
    classify_profile,
    classify_type,
    encode_params_64,
    encode_params_68,
    enumerator_params,
    extremality,
    meets_min_distance,
    weight_profile,
)
from .catalog import (
    CatalogRecord,
    CatalogStore,
    Fingerprint,
    KnownParamsTable,
    fingerprint_of,
    novelty_check,
    replay_provenance,
)
from .construct import (
    BlockTriple,
    SearchFilter,
    build_m_sigma,
    check_theorem1,
    enumerate_lifts,
    format_triple,
    parse_triple,
    search_base,
)
from .derive import (
    ExtensionWitness,
    NeighbourWitness,
    TailChain,
    extend,
    kth_range_chain,
    neighbour,
    random_neighbour_search,
    systematic_permutation,
    tail_neighbour,
    tail_witness_chain,
)
from .groups import (
    GroupRingElement,
    GroupSpec,
    cyclic_group,
    dihedral_group_8,
    format_element,
    gr_add,
    gr_mul,
    gr_star,
    group_by_name,
    is_unitary_unit,
    parse_element,
    sigma,
)

__all__ = [name for name in dir() if not name.startswith("_")]
