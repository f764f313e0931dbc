from .checker import CompositeChecker, check_category_axioms, check_strategy_independence, hom_count
from .composite import (
    CompositeMorphism, SpanMorphism, canonicalize, comult, counit, mult,
    precompose_middle, random_composite, span_equiv, unit,
)
from .djg import DJGMorphism, compose_all, compose_DJG, djg_equal, enumerate_djg, random_djg
from .rewriting import (
    INNERMOST, OUTERMOST, STRATEGIES, CospanRewriter, as_span, closed_form_compose,
    compose_chain, cospan_to_span, monotone_span, span_compose,
)
