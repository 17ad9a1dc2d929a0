"""Exact arithmetic for suborbital graphs of the modular group.

The package builds the directed graphs induced by two-parameter
congruence subgroups acting on the extended rationals, and checks every
construction against a brute-force group-action oracle.
"""

from .errors import (
    BoundTooLarge,
    InvalidBound,
    InvalidModulus,
    InvalidSpec,
    InvariantViolation,
    MalformedDocument,
    NotInvertible,
    NotMappable,
    SuborbitalError,
    VersionMismatch,
    ZeroOverZero,
)
from .rational import (
    INFINITY,
    ZERO,
    ProjectiveRational,
    compare,
    dedekind_psi,
    factorize,
    make_rational,
    mod_inverse,
    phi_pair,
)
from .group import (
    IDENTITY,
    SubgroupSpec,
    UnimodularMatrix,
    block_equivalent,
    compose,
    full_group,
    gamma0,
    gamma0_pair,
    gamma00,
    gamma00_pair,
    gamma1,
    gamma_upper0,
    invert,
    is_member,
    mobius_apply,
    principal,
    stabilizer_generator,
)
from .graphs import (
    FAMILY_INFINITY,
    FAMILY_ZERO,
    DirectedEdge,
    GraphSpec,
    SuborbitalGraph,
    VertexMapWitness,
    edge_check,
    enumerate_graph,
    is_self_paired,
    paired_partner,
    transitivity_witness,
    vertex_map_matrix,
)
from .oracle import (
    BoundedGroupSample,
    OrbitalSample,
    compare_edges_vs_orbital,
    count_blocks,
    enumerate_group,
    orbital_pairs,
    verify_lattice_identity,
    verify_self_paired,
)
from .graph_io import emit_dot, emit_json, emit_svg, parse_json

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "SuborbitalError",
    "ZeroOverZero",
    "NotInvertible",
    "InvalidModulus",
    "InvalidSpec",
    "InvalidBound",
    "BoundTooLarge",
    "NotMappable",
    "MalformedDocument",
    "VersionMismatch",
    "InvariantViolation",
    "ProjectiveRational",
    "INFINITY",
    "ZERO",
    "make_rational",
    "compare",
    "mod_inverse",
    "factorize",
    "dedekind_psi",
    "phi_pair",
    "UnimodularMatrix",
    "IDENTITY",
    "SubgroupSpec",
    "full_group",
    "principal",
    "gamma1",
    "gamma0",
    "gamma_upper0",
    "gamma00",
    "gamma0_pair",
    "gamma00_pair",
    "compose",
    "invert",
    "mobius_apply",
    "is_member",
    "stabilizer_generator",
    "block_equivalent",
    "GraphSpec",
    "DirectedEdge",
    "SuborbitalGraph",
    "FAMILY_INFINITY",
    "FAMILY_ZERO",
    "edge_check",
    "enumerate_graph",
    "is_self_paired",
    "paired_partner",
    "vertex_map_matrix",
    "VertexMapWitness",
    "transitivity_witness",
    "BoundedGroupSample",
    "OrbitalSample",
    "enumerate_group",
    "orbital_pairs",
    "compare_edges_vs_orbital",
    "count_blocks",
    "verify_lattice_identity",
    "verify_self_paired",
    "emit_json",
    "parse_json",
    "emit_dot",
    "emit_svg",
]
