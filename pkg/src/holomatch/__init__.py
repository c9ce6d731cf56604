"""Holographic algorithms with matchgates, in exact Gaussian-rational arithmetic."""
from .scalar_linalg import Scalar, parse_scalar, format_scalar, matrix, rank, determinant, inverse, pfaffian
from .signature_core import Signature, is_standard_signature, mgi_check, parity_check, matrix_form
from .matchgate_fkt import PlanarGraph, Matchgate, perfmatch, perfmatch_bruteforce, standard_signature
from .holo_transform import Basis, generator_to_standard, recognizer_from_standard, realizable_on
from .holant_engine import Matchgrid, holant_contract, holant_network, holant_via_perfmatch, compose
from .collapse_engine import collapse, collapse_domain2, collapse_domain4, classify_domain3
from .doppler_app import doppler_bruteforce, doppler_holographic, appendix_basis

__all__ = [
    "Scalar", "parse_scalar", "format_scalar", "matrix", "rank", "determinant", "inverse", "pfaffian",
    "Signature", "is_standard_signature", "mgi_check", "parity_check", "matrix_form",
    "PlanarGraph", "Matchgate", "perfmatch", "perfmatch_bruteforce", "standard_signature",
    "Basis", "generator_to_standard", "recognizer_from_standard", "realizable_on",
    "Matchgrid", "holant_contract", "holant_network", "holant_via_perfmatch", "compose",
    "collapse", "collapse_domain2", "collapse_domain4", "classify_domain3",
    "doppler_bruteforce", "doppler_holographic", "appendix_basis",
]
