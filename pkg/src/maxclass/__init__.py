"""Maximum concept classes, their one-inclusion complexes, peelings and compression schemes."""

from .compression import (
    RepresentationMap,
    check_non_clashing,
    check_round_trip,
    compress,
    is_acyclic,
    is_bijection_onto_small_sets,
    reconstruct,
    representation_from_peeling,
)
from .concepts import (
    ConceptClass,
    is_maximal,
    is_maximum,
    project,
    reduction,
    sauer_bound,
    shatters,
    tail,
    vc_dimension,
)
from .errors import Check, MaxClassError
from .graph import Cube, build_graph, enumerate_cubes, incident_colors, max_cube_dim
from .lifting import connected_components_mod, construct, lift, shift, shift_to_fixed_point
from .peeling import PeelingSequence, corner_peel, is_corner_vertex, min_peel, verify_corner_sequence
from .topology import TriState, boundary, is_collapsible, is_strongly_contractible

__version__ = "0.1.0"
