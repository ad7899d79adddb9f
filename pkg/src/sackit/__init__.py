"""Exact computational commutative algebra at desk scale: numerical
semigroups and their monomial ideals, Ulrich ideal verification, minimal
free resolutions with Ext/Tor dimension tables over Artinian monomial
algebras, and a rule-based certificate engine for the symmetric Auslander
condition."""

from .artinian import (
    DEFAULT_PRIME,
    ExtWindowReport,
    MinimalResolution,
    MonomialArtinianAlgebra,
    PresentedModule,
    Realization,
    cyclic_quotient,
    default_characteristic,
    direct_sum,
    ext_deg_window,
    ext_dims,
    free_module,
    is_free,
    minimal_resolution,
    module_from_presentation,
    quotient_algebra,
    realization,
    residue_field,
    syzygy_step,
    tor_dims,
    truncation_algebra,
)
from .certify import (
    CERT_SCHEMA,
    CITATIONS,
    AbstractCI,
    AbstractWithFiniteFlatCover,
    Certificate,
    Citation,
    Glued,
    ParameterPowerQuotient,
    PowerSeriesExt,
    Premise,
    SemigroupRing,
    Truncation,
    UlrichPowerQuotient,
    certify,
    parse_ring,
    validate_descriptor,
    verify_premise,
)
from .errors import SackitError
from .ideals import (
    SemigroupIdeal,
    UlrichReport,
    cumulative_rank_identity,
    estimate_ratio_holds,
    ideal_from_text,
    ideal_to_text,
    is_ulrich,
    power_layer_lengths,
    search_reduction,
    ulrich_rank_formula,
)
from .semigroup import NumericalSemigroup

__version__ = "0.1.0"

__all__ = [
    "AbstractCI",
    "AbstractWithFiniteFlatCover",
    "CERT_SCHEMA",
    "CITATIONS",
    "Certificate",
    "Citation",
    "DEFAULT_PRIME",
    "ExtWindowReport",
    "Glued",
    "MinimalResolution",
    "MonomialArtinianAlgebra",
    "NumericalSemigroup",
    "ParameterPowerQuotient",
    "PowerSeriesExt",
    "Premise",
    "PresentedModule",
    "Realization",
    "SackitError",
    "SemigroupIdeal",
    "SemigroupRing",
    "Truncation",
    "UlrichPowerQuotient",
    "UlrichReport",
    "certify",
    "cumulative_rank_identity",
    "cyclic_quotient",
    "default_characteristic",
    "direct_sum",
    "estimate_ratio_holds",
    "ext_deg_window",
    "ext_dims",
    "free_module",
    "ideal_from_text",
    "ideal_to_text",
    "is_free",
    "is_ulrich",
    "minimal_resolution",
    "module_from_presentation",
    "parse_ring",
    "power_layer_lengths",
    "quotient_algebra",
    "realization",
    "residue_field",
    "search_reduction",
    "syzygy_step",
    "tor_dims",
    "truncation_algebra",
    "ulrich_rank_formula",
    "validate_descriptor",
    "verify_premise",
]
