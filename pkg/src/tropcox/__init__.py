"""tropcox: toric degenerations of cubic del Pezzo Cox rings via tropical
subdivision of the Grassmannian Gr(3,6).

Exact-arithmetic library computing moneric and Khovanskii subspaces: the
t-adic field Q(t), Plucker algebra, the 27 Cox-Nagata generators, a
symmetry-reduced polyhedral refinement engine, the full cone-by-cone
classification, and the Khovanskii lifting check.
"""

__version__ = "0.1.0"

from .ratfield import RatFn, Rational, valuation, leading_coefficient, field_arithmetic
from .plucker import (PluckerPoint, PluckerBinomial, SignedPermutation,
                      plucker_from_matrix, plucker_relations, act,
                      equivalent_binomials)
from .coxnagata import (build_generators, evaluate_initial, monericity,
                        generator_degree, MonericClass, GENERATOR_IDS)

__all__ = [
    "RatFn", "Rational", "valuation", "leading_coefficient", "field_arithmetic",
    "PluckerPoint", "PluckerBinomial", "SignedPermutation",
    "plucker_from_matrix", "plucker_relations", "act", "equivalent_binomials",
    "build_generators", "evaluate_initial", "monericity", "generator_degree",
    "MonericClass", "GENERATOR_IDS",
]
