"""Exact operator calculus on the free associative algebra on x and y.

The package computes, over the rationals: noncommutative polynomials and
their tensor-valued partials, trace (necklace) spaces, the free Lie
algebra in its Lyndon basis, the tree space spanned by theta-pairs of
Lie elements, symplectic derivations with their divergence, the bigraded
kernel components cut out by the divergence, and an independent
commutative-polynomial model that must reproduce the same dimensions.
"""

from .free_assoc import (BiDegree, InhomogeneousError, NcPoly, TensorPoly,
                         ad_action, bidegree_of, commutator, diamond,
                         diamond_bimodule, epsilon, mul, partial_assoc, star)
from .trace_space import (TracePoly, canonical_rotation, cyclic_words,
                          euler_trace_check, partial_trace, tr)
from .free_lie import (DEGREE_CAP, DegreeCapError, FLElement, LiePoly,
                       NotLieError, bracket, dynkin_map, dynkin_project,
                       flspace_basis, flspace_dimension, is_lie_element,
                       lie_from_ncpoly, lyndon_words, partial_lie, theta)
from .derivations import (Derivation, act_on_trace, apply, bracket_der,
                          from_trace, is_symplectic, to_trace)
from .kv_algebra import (KrvComponent, cocycle_check, delta, divergence,
                         divergence_star, expected_dimension, krv_component)
from .poly_model import (BivarPoly, TrivarPoly, antisym_factor, cond_i_space,
                         cond_ii_residual, even_solutions_dim,
                         joint_solutions_dim, kappa_poly, lie_from_poly,
                         model_dimension, poly_from_lie, weight3_tree_dim)
from .expressions import (EvalError, ExprError, ParseError,
                          TypeMismatchError, Value, evaluate_source, parse,
                          render_value)
from .verify import SUITES, CaseResult, SuiteReport, run_suite
from .formats import SCHEMA

__version__ = "0.1.0"

__all__ = [
    "BiDegree", "InhomogeneousError", "NcPoly", "TensorPoly", "ad_action",
    "bidegree_of", "commutator", "diamond", "diamond_bimodule", "epsilon",
    "mul", "partial_assoc", "star",
    "TracePoly", "canonical_rotation", "cyclic_words", "euler_trace_check",
    "partial_trace", "tr",
    "DEGREE_CAP", "DegreeCapError", "FLElement", "LiePoly", "NotLieError",
    "bracket", "dynkin_map", "dynkin_project", "flspace_basis",
    "flspace_dimension", "is_lie_element", "lie_from_ncpoly", "lyndon_words",
    "partial_lie", "theta",
    "Derivation", "act_on_trace", "apply", "bracket_der", "from_trace",
    "is_symplectic", "to_trace",
    "KrvComponent", "cocycle_check", "delta", "divergence", "divergence_star",
    "expected_dimension", "krv_component",
    "BivarPoly", "TrivarPoly", "antisym_factor", "cond_i_space",
    "cond_ii_residual", "even_solutions_dim", "joint_solutions_dim",
    "kappa_poly", "lie_from_poly", "model_dimension", "poly_from_lie",
    "weight3_tree_dim",
    "EvalError", "ExprError", "ParseError", "TypeMismatchError", "Value",
    "evaluate_source", "parse", "render_value",
    "SUITES", "CaseResult", "SuiteReport", "run_suite",
    "SCHEMA",
    "__version__",
]
