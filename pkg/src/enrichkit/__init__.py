"""Exact computations for categories enriched over a continuous t-norm on [0,1]."""
from .quantale import (
    TNorm,
    co_residual,
    godel,
    least_idempotent_above,
    lukasiewicz,
    make_ordinal_sum,
    product,
    residuate,
    tnorm_apply,
)
from .category import EnrichedCat, derive_views, validate_category
from .errors import AxiomViolation, EnrichError, MismatchError, NotForwardCauchy, SchemaError
from .weights import colimit, is_cauchy_weight, is_ideal, make_weight, representable
from .nets import classify_net, generated_weight, make_net, net_limits
from .chain import V, V_OP, ChainCat, chain_completeness_report
from .topology import gamma, sober_alexandroff, validate_rvtop
from .domains import cauchy_completion, continuity_report, smyth_report, way_below

__all__ = [
    "TNorm",
    "EnrichedCat",
    "ChainCat",
    "V",
    "V_OP",
    "AxiomViolation",
    "EnrichError",
    "MismatchError",
    "NotForwardCauchy",
    "SchemaError",
    "cauchy_completion",
    "chain_completeness_report",
    "classify_net",
    "co_residual",
    "colimit",
    "continuity_report",
    "derive_views",
    "gamma",
    "generated_weight",
    "godel",
    "is_cauchy_weight",
    "is_ideal",
    "least_idempotent_above",
    "lukasiewicz",
    "make_net",
    "make_ordinal_sum",
    "make_weight",
    "net_limits",
    "product",
    "representable",
    "residuate",
    "smyth_report",
    "sober_alexandroff",
    "tnorm_apply",
    "validate_category",
    "validate_rvtop",
    "way_below",
]
