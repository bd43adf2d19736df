"""Exact engine for cluster-pattern mutation and rank-3 G-fans."""

from .chebyshev import ChebyshevValue, chebyshev_u, nu_ratio
from .exchange import (
    CyclicPresentation,
    ExchangeMatrix,
    NotCyclic,
    NotSkewSymmetrizable,
    NotTotallyInfinite,
    apply_matrix_word,
    cyclic_presentation,
    is_cluster_cyclic,
    is_totally_infinite,
    markov_constant,
    mutate_matrix,
    skew_symmetrizer,
    swap_indices_12,
)
from .explorer import (
    Fan,
    ResourceCapExceeded,
    cone_contains,
    explore,
    find_negative_orthant,
    interiors_disjoint,
    load_fan,
    load_fan_file,
    save_fan,
    save_fan_file,
)
from .quadratic import QuadraticNumber
from .rank2 import g_sequence, limit_vectors, rank2_matrices
from .rank3 import (
    FanTypeReport,
    InternalBandSearchFailure,
    PairNotInfinite,
    VertexTypeReport,
    fan_type,
    find_band_index,
    lifted_sequences,
    limit_rays,
    pair_asymptotics,
    vertex_type,
)
from .render import NearAntipode, RenderOptions, arc_polyline, project_ray, render_svg
from .seeds import (
    GCone,
    Seed,
    SignCoherenceViolation,
    apply_word,
    g_cone,
    initial_seed,
    mutate_seed,
    tropical_sign,
    verify_seed,
)

__all__ = [
    "ChebyshevValue",
    "CyclicPresentation",
    "ExchangeMatrix",
    "Fan",
    "FanTypeReport",
    "GCone",
    "InternalBandSearchFailure",
    "NearAntipode",
    "NotCyclic",
    "NotSkewSymmetrizable",
    "NotTotallyInfinite",
    "PairNotInfinite",
    "QuadraticNumber",
    "RenderOptions",
    "ResourceCapExceeded",
    "Seed",
    "SignCoherenceViolation",
    "VertexTypeReport",
    "apply_matrix_word",
    "apply_word",
    "arc_polyline",
    "chebyshev_u",
    "cone_contains",
    "cyclic_presentation",
    "explore",
    "fan_type",
    "find_band_index",
    "find_negative_orthant",
    "g_cone",
    "g_sequence",
    "initial_seed",
    "interiors_disjoint",
    "is_cluster_cyclic",
    "is_totally_infinite",
    "lifted_sequences",
    "limit_rays",
    "limit_vectors",
    "load_fan",
    "load_fan_file",
    "markov_constant",
    "mutate_matrix",
    "mutate_seed",
    "nu_ratio",
    "pair_asymptotics",
    "project_ray",
    "rank2_matrices",
    "render_svg",
    "save_fan",
    "save_fan_file",
    "skew_symmetrizer",
    "swap_indices_12",
    "tropical_sign",
    "verify_seed",
    "vertex_type",
]

__version__ = "0.1.0"
