from .interpret import CATEGORIES, MONOTONE, PAIRS, SPANS, TermInterpreter, interpret, morphisms_equal
from .runner import (
    ENUM_CATEGORIES, SUITES, normal_form, run_check, run_compose, run_enum, run_eq, run_interp,
    run_nf, run_suite, suite_model,
)
from .terms import Term, arity, compose_terms, parse, print_term, random_term
