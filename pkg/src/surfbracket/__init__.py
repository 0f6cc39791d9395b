"""Exact Goldman bracket on compact oriented surfaces with boundary.

Surfaces are one-vertex ribbon graphs, classes are canonical cyclic words
in the free fundamental group, and brackets are integer chains of classes.
"""

from surfbracket._kernels import BACKEND
from surfbracket.bracket import (
    Chain,
    Crossing,
    StrandSystem,
    band_consistent,
    bracket,
    bracket_chain,
    build_strand_pair,
    chain_add,
    chain_negate,
    chain_scale,
    crossings,
    jacobi_sum,
    render_chain,
    splice,
)
from surfbracket.geometricity import (
    DecisionReport,
    GeometricityError,
    find_witness,
    is_geometric,
    peripheral_structure,
)
from surfbracket.maps import (
    Homomorphism,
    MapError,
    Verdict,
    apply_chain,
    apply_class,
    apply_word,
    commutes_on,
    compose,
    homomorphism,
    identity,
    is_isomorphism,
    parse_map,
)
from surfbracket.surface import (
    PeripheralInfo,
    RibbonSurface,
    SurfaceError,
    boundary_words,
    is_peripheral,
    load_surface,
    one_holed_torus,
    pair_of_pants,
    parse_surface,
    topology_summary,
    validate_surface,
)
from surfbracket.words import (
    CyclicWord,
    Word,
    WordError,
    are_conjugate,
    concat,
    cyclic_canonical,
    enumerate_classes,
    invert,
    parse_word,
    power_class,
    primitive_root,
)

__version__ = "0.1.0"
