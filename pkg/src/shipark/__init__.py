"""Parking functions, mixed graphs on K_n, and Shi arrangement regions.

Three families of (n+1)^(n-1) objects and the explicit bijections
between them, with exact rational geometry throughout.
"""

from .bijections import (
    AlgorithmTrace,
    DownStep,
    Finalize,
    PhiInverse,
    SourcePriorityVector,
    UpStep,
    pak_stanley_label,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
)
from .cayley import (
    LabeledTree,
    PollakCode,
    PruferCode,
    parking_function_of_tree,
    pollak,
    pollak_inverse,
    prufer_decode,
    prufer_encode,
    tree_of_parking_function,
)
from .errors import (
    AlgorithmInvariantError,
    CapExceeded,
    OnHyperplaneError,
    ParseError,
    ShiparkError,
    ValidationError,
)
from .geometry import (
    Constraint,
    DifferenceSystem,
    Infeasible,
    RationalPoint,
    Region,
    RegionSignVector,
    Sign,
    Witness,
    braid_cell_of_point,
    enumerate_regions,
    feasible_interior,
    is_relatively_bounded,
    project_to_sum_zero,
    sign_vector_of_point,
    system_of_sign_vector,
)
from .graphs import (
    Digraph,
    EdgeKind,
    MixedGraph,
    ParkingGraph,
    Violation,
    ViolationKind,
    check_source_sink,
    enumerate_parking_graphs,
    in_degrees_mixed,
    in_degrees_oriented,
    is_acyclic_by_triangles,
    orient,
)
from .parking import (
    ParkingFunction,
    ParkingOutcome,
    check_by_simulation,
    check_by_sort,
    count_parking_functions,
    enumerate_parking_functions,
)

__version__ = "0.1.0"

__all__ = [
    "AlgorithmInvariantError",
    "AlgorithmTrace",
    "CapExceeded",
    "Constraint",
    "Digraph",
    "DifferenceSystem",
    "DownStep",
    "EdgeKind",
    "Finalize",
    "Infeasible",
    "LabeledTree",
    "MixedGraph",
    "OnHyperplaneError",
    "ParkingFunction",
    "ParkingGraph",
    "ParkingOutcome",
    "ParseError",
    "PhiInverse",
    "PollakCode",
    "PruferCode",
    "RationalPoint",
    "Region",
    "RegionSignVector",
    "ShiparkError",
    "Sign",
    "SourcePriorityVector",
    "UpStep",
    "ValidationError",
    "Violation",
    "ViolationKind",
    "Witness",
    "braid_cell_of_point",
    "check_by_simulation",
    "check_by_sort",
    "check_source_sink",
    "count_parking_functions",
    "enumerate_parking_functions",
    "enumerate_parking_graphs",
    "enumerate_regions",
    "feasible_interior",
    "in_degrees_mixed",
    "in_degrees_oriented",
    "is_acyclic_by_triangles",
    "is_relatively_bounded",
    "orient",
    "pak_stanley_label",
    "parking_function_of_tree",
    "phi",
    "phi_inverse",
    "pollak",
    "pollak_inverse",
    "project_to_sum_zero",
    "prufer_decode",
    "prufer_encode",
    "psi",
    "psi_inverse",
    "sign_vector_of_point",
    "system_of_sign_vector",
    "tree_of_parking_function",
]
