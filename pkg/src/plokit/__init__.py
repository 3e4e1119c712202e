"""Exact computations in PLo(I), the group of piecewise-linear
orientation-preserving homeomorphisms of the unit interval."""

from .chains import (
    ChainCertificate,
    ChainSearch,
    Order,
    Tower,
    compare_signed,
    conjugate_tower,
    detect_transition_chain,
    downset,
    is_fundamental,
    maximal_towers,
    product_orbital_check,
    search_transition_chain,
    signed_orbitals,
    upset,
)
from .constructions import MODEL_BUMP, crossing_pair, nested_tower, one_bump, wreath_generators
from .countability import (
    BumpCode,
    LengthClass,
    bouncepoints,
    bump_code,
    chain_partition_check,
    check_injectivity,
    corners,
    endpoint_witness,
    length_class,
    length_class_of,
    witness_intervals,
)
from .numeric import Interval, Rat, Relation, interval_relation, length, rat, shares_end
from .orbitals import (
    Direction,
    GenSet,
    HalfOpen,
    SignedOrbital,
    bump,
    direction,
    find_mover,
    fundamental_domain,
    group_orbitals,
    lies_in_fundamental_domain,
    orbitals,
)
from .plmap import (
    IDENTITY,
    PLMap,
    affine_components,
    boundary_slopes,
    breakpoints,
    commutator,
    compose,
    conjugate,
    evaluate,
    identity,
    invert,
    make_map,
    power,
)

__version__ = "0.1.0"
