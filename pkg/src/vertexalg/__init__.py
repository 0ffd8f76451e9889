"""Exact symbolic calculator for free and lattice vertex algebras."""

from .signature import (
    Scalar,
    Signature,
    SignatureError,
    format_weight,
    load_config,
    load_signature,
    make_signature,
    min_deg2,
    pairing,
    weight_parity,
)
from .words import (
    FreeElement,
    evaluate,
    format_element,
    format_word,
    product,
    translate,
    word_grade,
)
from .rewrite import RewriteOutcome, find_redex, is_basic, is_null_word, normal_form
from .basis import ColoredPartition, basis_words, dim_component, minimal_word
from .fock import FockElement, cocycle, embed, heis_act, rank, vacuum_product
from .derivations import DerivationSpec, apply_derivation, heisenberg_derivation, virasoro_derivation
from .parser import ParseError, parse_element, parse_expr, parse_weight

__all__ = [
    "Scalar",
    "Signature",
    "SignatureError",
    "ColoredPartition",
    "DerivationSpec",
    "FockElement",
    "FreeElement",
    "ParseError",
    "RewriteOutcome",
    "apply_derivation",
    "basis_words",
    "cocycle",
    "dim_component",
    "embed",
    "evaluate",
    "find_redex",
    "format_element",
    "format_weight",
    "format_word",
    "heis_act",
    "heisenberg_derivation",
    "is_basic",
    "is_null_word",
    "load_config",
    "load_signature",
    "make_signature",
    "min_deg2",
    "minimal_word",
    "normal_form",
    "pairing",
    "parse_element",
    "parse_expr",
    "parse_weight",
    "product",
    "rank",
    "translate",
    "vacuum_product",
    "virasoro_derivation",
    "weight_parity",
    "word_grade",
]
