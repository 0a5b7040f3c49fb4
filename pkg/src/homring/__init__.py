"""Exact trace codes over finite commutative rings.

Everything is integer / rational arithmetic: characters live in cyclotomic
integer rings, weights and transform values are ``fractions.Fraction``, and
the two independent routes to every transform value are cross-checked.
"""

from .codes import (Code, CodeFunction, SpectrumSet, WeightEnumerator,
                    build_code, closed_form_enumerator, closed_form_spectrum,
                    code_spectrum, frank_map, function_from_spec, power_map,
                    sigma_quadratic_map, spectrum, transform_W,
                    weight_enumerator)
from .errors import (BadPermutation, BudgetExceeded, HomringError,
                     InternalInvariantViolation, InvalidParameter, InvalidRing,
                     NotGenerating, NotLocal, NotRational, NotTwoWeight,
                     OutOfRange, ParseError, SingularSystem, UnknownPreset,
                     ValidationFailed, WrongRingFamily)
from .graphs import (CodeGraph, SRGFailure, SRGParams, connected_components,
                     function_columns, is_modular, srg_check, two_weight_graph)
from .rings import (GaloisRing, IntegerModRing, Ring, TableRing, fxy_ring,
                    make_galois_ring, make_integer_ring, ring_from_spec,
                    z4x_ring)
from .traces import (Character, TraceMap, TraceReport, canonical_character,
                     enumerate_trace_maps, galois_trace, generating_character,
                     identity_trace, subring_embedding, trace_from_spec,
                     validate_trace)
from .weights import (WeightTable, hamming_table, hom_weight,
                      hom_weight_axiomatic, parse_gamma, validate_weight)

__version__ = "0.1.0"

__all__ = [
    "BadPermutation", "BudgetExceeded", "Character", "Code", "CodeFunction",
    "CodeGraph", "GaloisRing", "HomringError", "IntegerModRing",
    "InternalInvariantViolation", "InvalidParameter", "InvalidRing",
    "NotGenerating", "NotLocal", "NotRational", "NotTwoWeight", "OutOfRange",
    "ParseError", "Ring", "SRGFailure", "SRGParams", "SingularSystem",
    "SpectrumSet", "TableRing", "TraceMap", "TraceReport", "UnknownPreset",
    "ValidationFailed", "WeightEnumerator", "WeightTable", "WrongRingFamily",
    "build_code", "canonical_character", "closed_form_enumerator",
    "closed_form_spectrum", "code_spectrum", "connected_components",
    "enumerate_trace_maps", "frank_map", "function_columns",
    "function_from_spec", "fxy_ring", "galois_trace", "generating_character",
    "hamming_table", "hom_weight", "hom_weight_axiomatic", "identity_trace",
    "is_modular", "make_galois_ring", "make_integer_ring", "parse_gamma",
    "power_map", "ring_from_spec", "sigma_quadratic_map", "spectrum",
    "srg_check", "subring_embedding", "trace_from_spec", "transform_W",
    "two_weight_graph", "validate_trace", "validate_weight",
    "weight_enumerator", "z4x_ring",
]
