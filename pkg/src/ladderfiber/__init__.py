"""Ladder determinantal modules and the Gorenstein property of their special fibers."""

from .errors import CapExceeded, LadderError, OracleDisagreement, ShapeError
from .gorenstein import (
    GorensteinReport,
    check_gorenstein,
    decide,
    hvector_oracle,
    is_gorenstein_connected,
    is_gorenstein_L,
    is_gorenstein_local,
    is_gorenstein_M,
    purity_oracle,
)
from .invariants import InvariantReport, fiber_dimension, invariants
from .ladder import (
    LadderShape,
    blocks,
    format_shape,
    gaps,
    normalize,
    parse_shape,
    validate,
)
from .lattice import (
    FiberPoint,
    HVector,
    count_lattice,
    enumerate_lattice,
    h_vector,
    hibi_relations,
    multichain_hilbert,
)
from .minors import diagonal_leading_check, fiber_hilbert_direct, minor_det
from .poset import (
    FinitePoset,
    JoinIrr,
    is_pure,
    join_irreducibles,
    join_irreducibles_oracle,
    rank,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "blocks",
    "CapExceeded",
    "check_gorenstein",
    "count_lattice",
    "decide",
    "diagonal_leading_check",
    "enumerate_lattice",
    "fiber_dimension",
    "fiber_hilbert_direct",
    "FiberPoint",
    "FinitePoset",
    "format_shape",
    "gaps",
    "GorensteinReport",
    "h_vector",
    "hibi_relations",
    "HVector",
    "hvector_oracle",
    "InvariantReport",
    "invariants",
    "is_gorenstein_connected",
    "is_gorenstein_L",
    "is_gorenstein_local",
    "is_gorenstein_M",
    "is_pure",
    "join_irreducibles",
    "join_irreducibles_oracle",
    "JoinIrr",
    "LadderError",
    "LadderShape",
    "minor_det",
    "multichain_hilbert",
    "normalize",
    "OracleDisagreement",
    "parse_shape",
    "purity_oracle",
    "rank",
    "ShapeError",
    "to_dot",
    "validate",
]
