"""Exact circle sums of polynumbers over finite fields in blue, red and green geometry."""

from .chromogeometry import Color, AffinePoint, Dihedron, circle_enumerate, circle_parametrize
from .finite_field import FieldSpec, FieldElement, field_make, parse_field_spec
from .fourier import fourier_summation_program, psi, psi_brute, psi_closed, psi_general
from .polynumber import QQ, Polynumber, Polynumber2, circular_polynumber, krawtchouk_value
from .super_catalan import circular_super_catalan, super_catalan

__version__ = "0.1.0"
