"""Minimal-trellis state complexity of linear and algebraic-geometric codes."""

__version__ = "0.1.0"

from .gf import GF, FieldElement, field_create  # noqa: E402
from .code import (  # noqa: E402
    BudgetExceeded,
    DegenerateCode,
    LinearCode,
    StateProfile,
    code_from_matrix,
    dual,
    min_distance_bruteforce,
    state_profile,
    state_profile_msgm,
)
from .trellis import Trellis, build_minimal_trellis, viterbi_decode  # noqa: E402
from .semigroup import (  # noqa: E402
    GonalitySequence,
    NumericalSemigroup,
    gonality_from_plane_degree,
    nongaps_up_to,
)
from .bounds import AgDescriptor, BoundReport, best_lower_bound  # noqa: E402

__all__ = [
    "GF", "FieldElement", "field_create", "BudgetExceeded", "DegenerateCode", "LinearCode",
    "StateProfile", "code_from_matrix", "dual", "min_distance_bruteforce", "state_profile",
    "state_profile_msgm", "Trellis", "build_minimal_trellis", "viterbi_decode",
    "GonalitySequence", "NumericalSemigroup", "gonality_from_plane_degree", "nongaps_up_to",
    "AgDescriptor", "BoundReport", "best_lower_bound",
]
