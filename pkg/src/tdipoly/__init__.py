"""Exact operator calculus and translation/dilation invariant spaces of polynomials."""

from .multiindex import INF, LowerSet, downward_closure, enveloping_slabs, slab, truncate
from .operators import OperatorMode, apply_operator, difference, dilate, partial, translate
from .polynomial import Polynomial, fit_from_values, format_poly, monomial, parse
from .spaces import PolySpace, sigma_orbit, span_basis, tau_orbit, tausigma_orbit, tdi_closure

__version__ = "0.1.0"
