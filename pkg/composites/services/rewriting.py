# composites/services/rewriting.py
"""
Turning cospans into spans.

For A: p→m and B: q→m in 𝔻⊗J⊗𝔾 the engine finds β: r→p and α: r→q with
Bᵒᵖ∘A = α∘βᵒᵖ. Middle elements are peeled off first (inverted onto the
legs); the remaining monotone cospan is split into generator letters and
resolved pairwise by the elementary rules:

* letters on different output wires commute;
* (m, m) on one wire gives in-leg m⊔m and out-leg (m⊔m)∘σ₂,₃;
* (u, u) gives the empty span, (m, u) gives u⊔u on the in-leg and
  (u, m) gives u⊔u on the out-leg.
"""
import logging
from functools import reduce

from ordmaps.services import (
    MULT, MULT_MAP, UNIT, UNIT_MAP, OrderedMap, compose_mono, decompose,
    identity_map, letters, tensor_all, tensor_mono,
)
from utils.helpers import setting
from utils.validators import ArityError, InvalidDataError, RewriteError

from .composite import SpanMorphism, canonicalize
from .djg import DJGMorphism, compose_DJG

logger = logging.getLogger(__name__)

INNERMOST = 'innermost'
OUTERMOST = 'outermost'
STRATEGIES = (INNERMOST, OUTERMOST)


def monotone_span(family, phi_a, phi_b):
    """
    Closed-form span of the monotone cospan (φ_a, φ_b).

    Over each wire the middle is the grid φ_a⁻¹(c) × φ_b⁻¹(c) listed
    row by row; the out-leg first transposes every grid with a positive
    crossing permutation.
    """
    if phi_a.codomain != phi_b.codomain:
        raise ArityError(f"cospan legs end at {phi_a.codomain} and {phi_b.codomain}")
    xs, ys = [], []
    for c in range(phi_a.codomain):
        for x in phi_a.fiber(c):
            for y in phi_b.fiber(c):
                xs.append(x)
                ys.append(y)
    r = len(xs)
    order = sorted(range(r), key=lambda k: (ys[k], xs[k]))
    tau = [0] * r
    for position, k in enumerate(order):
        tau[k] = position
    beta = DJGMorphism.from_mono(family, OrderedMap(r, phi_a.domain, tuple(xs)))
    alpha = DJGMorphism(
        family,
        family.positive_lift(tuple(tau)),
        OrderedMap(r, phi_b.domain, tuple(ys[k] for k in order)),
    )
    return beta, alpha


def _compose_letters(found, domain):
    return reduce(lambda f, letter: compose_mono(letter.map, f), found, identity_map(domain))


class CospanRewriter:
    """
    Applies the elementary rules recursively under a step budget.

    `innermost` pairs the codomain-nearest letters of both legs first;
    `outermost` consumes the in-leg word from its domain end.
    """

    def __init__(self, family, strategy=INNERMOST, budget=None):
        if strategy not in STRATEGIES:
            raise InvalidDataError(f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGIES)}")
        self.family = family
        self.strategy = strategy
        self.budget = budget or setting('REWRITE_BUDGET')
        self.steps = 0

    def _spend(self):
        self.steps += 1
        if self.steps > self.budget:
            raise RewriteError(f"cospan rewriting exceeded {self.budget} steps")

    def solve(self, a, b):
        """(β, α) with bᵒᵖ∘a = α∘βᵒᵖ for DJG morphisms a, b with a common codomain"""
        if a.codomain != b.codomain:
            raise ArityError(f"cospan legs end at {a.codomain} and {b.codomain}")
        self._spend()
        family = self.family
        beta, alpha = self._solve_mono(a.mono, b.mono)
        if not a.has_trivial_elt():
            beta = compose_DJG(DJGMorphism.from_elt(family, family.inverse(a.elt)), beta)
        if not b.has_trivial_elt():
            alpha = compose_DJG(DJGMorphism.from_elt(family, family.inverse(b.elt)), alpha)
        return beta, alpha

    def _solve_mono(self, phi_a, phi_b):
        self._spend()
        family = self.family
        if phi_a.is_identity():
            return DJGMorphism.from_mono(family, phi_b), DJGMorphism.identity(family, phi_b.domain)
        if phi_b.is_identity():
            return DJGMorphism.identity(family, phi_a.domain), DJGMorphism.from_mono(family, phi_a)
        found_a = letters(decompose(phi_a))
        found_b = letters(decompose(phi_b))
        if len(found_a) == 1 and len(found_b) == 1:
            return self.elementary(found_a[0], found_b[0])
        if self.strategy == INNERMOST:
            return self._innermost(found_a, found_b, phi_a.domain, phi_b.domain)
        return self._outermost(found_a, found_b, phi_a.domain, phi_b.domain)

    def _innermost(self, found_a, found_b, p, q):
        family = self.family
        head_a, rest_a = found_a[-1], _compose_letters(found_a[:-1], p)
        head_b, rest_b = found_b[-1], _compose_letters(found_b[:-1], q)
        beta1, alpha1 = self._solve_mono(head_a.map, head_b.map)
        beta2, alpha2 = self.solve(DJGMorphism.from_mono(family, rest_a), beta1)
        beta3, alpha3 = self.solve(compose_DJG(alpha1, alpha2), DJGMorphism.from_mono(family, rest_b))
        return compose_DJG(beta2, beta3), alpha3

    def _outermost(self, found_a, found_b, p, q):
        family = self.family
        if len(found_a) > 1:
            first = found_a[0].map
            rest = _compose_letters(found_a[1:], first.codomain)
            beta1, alpha1 = self._solve_mono(rest, _compose_letters(found_b, q))
            beta2, alpha2 = self.solve(DJGMorphism.from_mono(family, first), beta1)
            return beta2, compose_DJG(alpha1, alpha2)
        first = found_b[0].map
        rest = _compose_letters(found_b[1:], first.codomain)
        beta1, alpha1 = self._solve_mono(found_a[0].map, rest)
        beta2, alpha2 = self.solve(alpha1, DJGMorphism.from_mono(family, first))
        return compose_DJG(beta1, beta2), alpha2

    def elementary(self, a, b):
        """One letter against one letter"""
        family = self.family
        if a.offset != b.offset:
            return monotone_span(family, a.map, b.map)
        width = a.map.codomain
        before, after = identity_map(a.offset), identity_map(width - a.offset - 1)

        def around(f):
            return tensor_all((before, f, after))

        kind = (a.symbol, b.symbol)
        if kind == (MULT, MULT):
            pair = tensor_mono(MULT_MAP, MULT_MAP)
            crossing = family.tensor(
                family.tensor(family.identity(a.offset), family.crossing(4, 2)),
                family.identity(width - a.offset - 1),
            )
            return (
                DJGMorphism.from_mono(family, around(pair)),
                DJGMorphism(family, crossing, around(pair)),
            )
        rest = DJGMorphism.identity(family, width - 1)
        units = DJGMorphism.from_mono(family, around(tensor_mono(UNIT_MAP, UNIT_MAP)))
        if kind == (UNIT, UNIT):
            return rest, rest
        if kind == (MULT, UNIT):
            return units, rest
        if kind == (UNIT, MULT):
            return rest, units
        raise InvalidDataError(f"no rule for letters {kind}")


def cospan_to_span(right_out, left_out, strategy=INNERMOST, budget=None):
    """
    Rewrite left_outᵒᵖ∘right_out as a span.

    right_out: p→m is the out-leg of the first span, left_out: q→m the
    in-leg of the second; the result is the span p ← r → q.
    """
    rewriter = CospanRewriter(right_out.family, strategy, budget)
    beta, alpha = rewriter.solve(right_out, left_out)
    logger.debug(f"cospan {right_out.domain}->{right_out.codomain}<-{left_out.domain} solved in {rewriter.steps} steps")
    return SpanMorphism(beta, alpha)


def as_span(morphism):
    if isinstance(morphism, SpanMorphism):
        return morphism
    return morphism.to_span()


def span_compose(s2, s1, strategy=INNERMOST, budget=None):
    """s2∘s1 as a canonical triple"""
    s1, s2 = as_span(s1), as_span(s2)
    if s1.codomain != s2.domain:
        raise ArityError(f"cannot compose spans: {s1.codomain} != {s2.domain}")
    middle = cospan_to_span(s1.out_leg, s2.in_leg, strategy, budget)
    return canonicalize(SpanMorphism(
        compose_DJG(s1.in_leg, middle.in_leg),
        compose_DJG(s2.out_leg, middle.out_leg),
    ))


def closed_form_compose(s2, s1):
    """s2∘s1 resolving the monotone part of the inner cospan in one step"""
    s1, s2 = as_span(s1), as_span(s2)
    if s1.codomain != s2.domain:
        raise ArityError(f"cannot compose spans: {s1.codomain} != {s2.domain}")
    family = s1.family
    a, b = s1.out_leg, s2.in_leg
    beta, alpha = monotone_span(family, a.mono, b.mono)
    beta = compose_DJG(DJGMorphism.from_elt(family, family.inverse(a.elt)), beta)
    alpha = compose_DJG(DJGMorphism.from_elt(family, family.inverse(b.elt)), alpha)
    return canonicalize(SpanMorphism(
        compose_DJG(s1.in_leg, beta),
        compose_DJG(s2.out_leg, alpha),
    ))


def compose_chain(morphisms, strategy=INNERMOST):
    """Compose in diagrammatic order: the first entry acts first"""
    morphisms = list(morphisms)
    result = canonicalize(as_span(morphisms[0]))
    for g in morphisms[1:]:
        result = span_compose(g, result, strategy)
    return result
