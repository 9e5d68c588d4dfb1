"""Recognition of pseudo-polygon visibility graphs.

Decides whether a graph with a labeled boundary cycle is the visibility
graph of a pseudo-polygon by searching for a blocker assignment that
satisfies five necessary conditions, and ships an exact integer-geometry
polygon oracle that generates ground-truth instances for every property
the recognizer relies on.
"""

from .blockers import (
    CandidateSet,
    all_candidates,
    assignment_from_json,
    assignment_to_json,
    candidate_blockers,
)
from .conditions import (
    PinchedQuadruple,
    SeparablePair,
    Violation,
    check_conditions,
    pinched_quadruples,
    separable_pairs,
    violations_to_json,
)
from .errors import (
    DegenerateInput,
    GenerationBudgetExceeded,
    GraphError,
    IndexOutOfRange,
    InvalidAssignment,
    MissingCycleEdge,
    NotACandidate,
    NotInvisible,
    OracleContradiction,
    PseudovisError,
    SearchBudgetExceeded,
    SelfLoop,
    UnknownPair,
    VertexOutsideInterval,
)
from .geometry import (
    EdgeHit,
    Polygon,
    check_blocker_uniqueness,
    check_edge_vertex_visibility,
    check_gap_witness_cases,
    designated_blocker_geo,
    geometric_blockers,
    polygon_from_json,
    polygon_to_json,
    random_simple_polygon,
    ray_first_exit,
    sees_edge,
    sees_vertex,
    validate_polygon,
    ve_graph_geo,
    visibility_graph,
)
from .graph_core import (
    BoundaryInterval,
    VisGraph,
    graph_from_json,
    graph_to_json,
    interval_edges,
    interval_vertices,
    invisible_pairs,
    validate_graph,
)
from .recognizer import (
    EmptyCandidateSet,
    ExhaustedSearch,
    Verdict,
    VerifyReport,
    find_assignment,
    verdict_to_json,
    verify,
)
from .vertex_edge import (
    CharacterizationFailure,
    VEGraph,
    articulation_by_incidence,
    build_ve,
    check_ve_characterization,
    is_articulation,
    seen_edge_gaps,
    ve_from_json,
    ve_to_json,
)

__version__ = "0.1.0"
