"""DATALOG with constraints: theories, grounding and an answer-set solver."""

from .core import (
    ClosureResult,
    Clause,
    HornRule,
    Kind,
    Literal,
    SelectConstraint,
    Theory,
    TheoryBuilder,
    brute_force_answer_sets,
    check_pre_constraints,
    is_answer_set,
    least_model,
)
from .fmt import ParseDiagnostic, ParseError, parse_theory, serialize_theory, validate_theory
from .ground import PredicateProgram, compute_ranges, eval_guard, ground, parse_program

__version__ = "0.1.0"
