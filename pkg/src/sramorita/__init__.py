"""Exact decision procedures for Morita equivalence of symplectic reflection algebra parameters."""
from .exact import GaussianRational, parse_scalar, format_scalar
from .mckay import QuiverData, build_affine_quiver, quiver_from_name
from .weyl import Permute, Reflect, same_orbit, canonical_form, canonical_form_complex
from .gwa import gwa_decide
from .cherednik import cherednik_decide

__all__ = [
    "GaussianRational", "parse_scalar", "format_scalar",
    "QuiverData", "build_affine_quiver", "quiver_from_name",
    "Permute", "Reflect", "same_orbit", "canonical_form", "canonical_form_complex",
    "gwa_decide", "cherednik_decide",
]
