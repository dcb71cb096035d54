"""Edge ideals, ideals of vertex covers and leader placement for clique-plus-stars graphs."""

__version__ = "0.1.0"

from .covers import (
    CoverCollection,
    EnumerationConfig,
    has_cover_of_size,
    minimal_covers,
    minimal_transversals,
    predicted_covers_h,
)
from .errors import CoverdealError, ResourceLimitError, UnsupportedConfiguration, ValidationError
from .graph import (
    HFamilySpec,
    SimpleGraph,
    build_h_graph,
    complement,
    degree,
    is_chordal,
    load_graph_json,
    to_dot,
)
from .invariants import (
    InvariantReport,
    cover_ideal_invariants,
    edge_ideal_invariants,
    height_check,
    unmixedness_check,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    closed_form_cover_ideal_h,
    colon_by_monomial,
    cover_ideal_by_intersection,
    cover_ideal_from_covers,
    edge_ideal,
    equal,
)
from .planner import PlacementPlan, plan_placement
from .quotients import (
    QuotientCertificate,
    QuotientFailure,
    ResolutionShape,
    betti_from_certificate,
    h_family_order,
    search_linear_quotients,
    verify_linear_quotients,
)
