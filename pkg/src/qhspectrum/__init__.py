"""Steenbrink spectra, Hodge numbers and minimal exponents of isolated
quasi-homogeneous hypersurface singularities, computed exactly from the
Jacobian ideal.
"""

from .errors import (AmbiguousWeights, ConstantTerm, InputError, InternalInvariantError,
                     NonIsolatedSingularity, NonZeroDimensional, NotQuasiHomogeneous,
                     PolySyntaxError, SmoothPoint, UnknownVariable, VariableMismatch, ZeroIdeal)
from .groebner import (GroebnerBasis, MonomialOrder, StaircaseBasis, buchberger, compare,
                       is_groebner_basis, normal_form, staircase)
from .invariants import (InvariantReport, PropertyOutcome, classify, minimal_exponent,
                         property_suite, s_invariants)
from .parser import parse_polynomial
from .pipeline import Analysis, analyze, analyze_text
from .poly import Polynomial, Rational, partial_derivative
from .singularity import (MilnorData, WeightSystem, check_quasi_homogeneous, infer_weights,
                          jacobian_ideal, milnor_data)
from .spectrum import (Spectrum, compute_spectrum, spectral_number,
                       spectrum_oracle_brieskorn_pham, spectrum_oracle_product)

__version__ = "0.1.0"
