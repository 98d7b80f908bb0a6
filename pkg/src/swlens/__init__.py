"""Exact Seiberg-Witten invariants of lens spaces."""
from .arith import Rational
from .cycpoly import CycPoly, aug, proj, translate_equiv
from .dedekind import dedekind_sum, dr_sum_brute, dr_sum_fast, RademacherArgs
from .errors import (BadModulus, ModulusMismatch, NotCoprime, NotNegativeDefinite,
                     RDependenceNonzero, SWLensError, UnsupportedStructure, ZeroDenominator)
from .plumbing import ContinuedFraction, IntersectionForm, cf_eval, elkies_theta, hj_expand, theta_pq
from .seifert import LensSpace, geometric_structure, make_lens
from .sw import casson_walker, compute, froyshov, sw_poly, torsion_part

__all__ = [
    "Rational", "CycPoly", "aug", "proj", "translate_equiv",
    "dedekind_sum", "dr_sum_brute", "dr_sum_fast", "RademacherArgs",
    "BadModulus", "ModulusMismatch", "NotCoprime", "NotNegativeDefinite",
    "RDependenceNonzero", "SWLensError", "UnsupportedStructure", "ZeroDenominator",
    "ContinuedFraction", "IntersectionForm", "cf_eval", "elkies_theta", "hj_expand", "theta_pq",
    "LensSpace", "geometric_structure", "make_lens",
    "casson_walker", "compute", "froyshov", "sw_poly", "torsion_part",
]
