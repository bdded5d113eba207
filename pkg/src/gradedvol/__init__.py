"""Asymptotic multiplicities of graded families of monomial ideals, computed exactly.

The main entry points:

* :mod:`gradedvol.monomial` for ideals, colengths and multiplicities,
* :mod:`gradedvol.families` for graded families,
* :mod:`gradedvol.okounkov` for value semigroups and their convex bodies,
* :mod:`gradedvol.asymptotics` for limits such as volume and epsilon multiplicity.
"""

from .arith import RadicalNumber, WeightVector, rad_compare, rad_to_decimal
from .asymptotics import (
    additivity_check,
    epsilon,
    multiplicity,
    phi_limit,
    phi_sequence,
    symbolic_multiplicity,
    volume,
    volume_equals_multiplicity,
)
from .families import (
    Custom,
    Powers,
    StaircaseRule,
    SymbolicPowers,
    ValuationIdeals,
    family_constants,
    family_from_json,
    verify_graded,
)
from .limits import LimitEstimate, estimate_limit
from .monomial import FacePrime, MonomialIdeal, NotPrimaryError, colength
from .okounkov import body, build_semigroup, check_conditions, density_trend

__version__ = "0.1.0"

__all__ = [
    "Custom",
    "FacePrime",
    "LimitEstimate",
    "MonomialIdeal",
    "NotPrimaryError",
    "Powers",
    "RadicalNumber",
    "StaircaseRule",
    "SymbolicPowers",
    "ValuationIdeals",
    "WeightVector",
    "additivity_check",
    "body",
    "build_semigroup",
    "check_conditions",
    "colength",
    "density_trend",
    "epsilon",
    "estimate_limit",
    "family_constants",
    "family_from_json",
    "multiplicity",
    "phi_limit",
    "phi_sequence",
    "rad_compare",
    "rad_to_decimal",
    "symbolic_multiplicity",
    "verify_graded",
    "volume",
    "volume_equals_multiplicity",
]
