"""Tile-generated rank-2 graphs, aperiodicity certificates, and the induced
two-dimensional shifts of finite type.

The pipeline: a hereditary lattice tile, a finite alphabet, and one alphabet
bijection per reduced-set pattern generate a finite vertex family of
labelled tiles; overlap conditions wire those vertices into a bicoloured
skeleton whose paths form a rank-2 graph with unique factorisation.  On top
of the graph sit exhaustively checkable certificates (breaking cycles for
aperiodicity, strong connectivity, the simplicity report) and the shift
space view (window admissibility, block counts, vanishing entropy).
"""

from .data import (
    Alphabet,
    BasicData,
    PrwParams,
    Vertex,
    enumerate_vertices,
    import_prw,
    make_vertex,
    pattern_key,
    prw_vertex_labellings,
    validate_basic_data,
    validate_prw,
    vertex_from_labels,
)
from .dynamics import (
    AperiodicityStatus,
    AperiodicityVerdict,
    BreakingCycle,
    ConnectivityResult,
    SimplicityReport,
    aperiodicity_verdict,
    breaking_cycle_candidates,
    colour_subgraph_cycles,
    cross_validate_prw,
    find_breaking_cycle,
    periodicity_witness_search,
    prw_aperiodicity_check,
    simplicity_report,
    strong_connectivity,
    validate_breaking_cycle,
)
from .errors import (
    DegenerateTile,
    EmptyTile,
    InconsistentInput,
    InvariantViolation,
    MissingPattern,
    NotAdmissible,
    NotBijective,
    NotHereditary,
    NotInvertible,
    OutOfRange,
    RegionShapeMismatch,
    SizeLimit,
    SourceRangeMismatch,
    TileGraphError,
    UnknownSymbol,
    ValidationError,
)
from .graph import (
    BLUE,
    RED,
    Path,
    Skeleton,
    all_paths,
    build_skeleton,
    compose,
    edge_condition,
    enumerate_paths,
    factorize,
    fill_corner_br,
    fill_corner_ul,
    path_count,
    to_dot,
)
from .lattice import (
    E1,
    E2,
    ORIGIN,
    Point,
    Region,
    Tile,
    overlap,
    parse_tile,
    reduced_set,
    translate_union,
)
from .limits import DEFAULT_LIMITS, Limits
from .shifts import (
    BlockCensus,
    WindowConfig,
    config_to_path,
    count_blocks,
    entropy_sequence,
    path_to_config,
    window_admissible,
)

__version__ = "0.1.0"
