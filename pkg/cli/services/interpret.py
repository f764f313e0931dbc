# cli/services/interpret.py
import logging

from composites.services import (
    CompositeMorphism, DJGMorphism, SpanMorphism, canonicalize, compose_DJG, djg_equal,
    span_compose,
)
from groups.services import GroupTuple
from ordmaps.services import MULT_MAP, UNIT_MAP, compose_mono, identity_map, tensor_mono
from utils.validators import ArityError, InvalidDataError, TermArityError

from .terms import (
    COMPOSE, CROSSING, FLAG, IDENTITY, LABELS, MULT, OP, SPAN, TENSOR, TWIST, UNIT, print_term,
)

logger = logging.getLogger(__name__)

MONOTONE, PAIRS, SPANS = 'd', 'dpg', 'span'
CATEGORIES = (MONOTONE, PAIRS, SPANS)


class TermInterpreter:
    """
    Reads terms as morphisms of one category.

    d: monotone maps only; dpg: pairs (φ, j) of the family; span: canonical
    triples, where op() and span(...) are also available.
    """

    def __init__(self, category, family=None):
        if category not in CATEGORIES:
            raise InvalidDataError(f"unknown category {category!r}; expected one of {', '.join(CATEGORIES)}")
        if category != MONOTONE and family is None:
            raise InvalidDataError(f"category {category} needs a family")
        self.category = category
        self.family = family

    def __call__(self, term):
        try:
            return self._interpret(term)
        except TermArityError:
            raise
        except ArityError as e:
            raise TermArityError(str(e), print_term(term)) from None

    def _unavailable(self, term):
        return TermArityError(f"{term.kind} is not a morphism of {self.category}", print_term(term))

    def _element(self, term):
        family, kind, args = self.family, term.kind, term.args
        if kind == LABELS:
            try:
                labels = GroupTuple.from_names(family.group, args)
            except InvalidDataError as e:
                raise TermArityError(str(e), print_term(term)) from None
            return family.from_labels(labels)
        if kind == CROSSING:
            return family.crossing(args[0] + 1, args[0])
        if kind == FLAG:
            return family.flip(args[0], args[0] - 1)
        return family.twist(args[0], args[0] - 1)

    def _monotone(self, term):
        kind, args = term.kind, term.args
        if kind == IDENTITY:
            return identity_map(args[0])
        if kind == MULT:
            return MULT_MAP
        if kind == UNIT:
            return UNIT_MAP
        if kind == COMPOSE:
            return compose_mono(self._monotone(args[1]), self._monotone(args[0]))
        if kind == TENSOR:
            return tensor_mono(self._monotone(args[0]), self._monotone(args[1]))
        raise self._unavailable(term)

    def _pair(self, term):
        family, kind, args = self.family, term.kind, term.args
        if kind == IDENTITY:
            return DJGMorphism.identity(family, args[0])
        if kind in (MULT, UNIT):
            return DJGMorphism.from_mono(family, self._monotone(term))
        if kind in (LABELS, CROSSING, FLAG, TWIST):
            return DJGMorphism.from_elt(family, self._element(term))
        if kind == COMPOSE:
            return compose_DJG(self._pair(args[1]), self._pair(args[0]))
        if kind == TENSOR:
            return self._pair(args[0]).tensor(self._pair(args[1]))
        raise self._unavailable(term)

    def _span(self, term):
        family, kind, args = self.family, term.kind, term.args
        if kind == IDENTITY:
            return CompositeMorphism.identity(family, args[0])
        if kind in (MULT, UNIT):
            return CompositeMorphism.from_mono(family, self._monotone(term))
        if kind in (LABELS, CROSSING, FLAG, TWIST):
            return CompositeMorphism.from_elt(family, self._element(term))
        if kind == OP:
            return self._span(args[0]).op()
        if kind == COMPOSE:
            return span_compose(self._span(args[1]), self._span(args[0]))
        if kind == TENSOR:
            return self._span(args[0]).tensor(self._span(args[1]))
        if kind == SPAN:
            in_leg, elt, out_leg = (self._pair(leg) for leg in args)
            if elt.mono != identity_map(elt.domain):
                raise TermArityError("the middle of a span must be a group element", print_term(args[1]))
            return canonicalize(SpanMorphism(in_leg, compose_DJG(out_leg, elt)))
        raise self._unavailable(term)

    def _interpret(self, term):
        if self.category == MONOTONE:
            return self._monotone(term)
        if self.category == PAIRS:
            return self._pair(term)
        return canonicalize(self._span(term).to_span())


def interpret(term, category, family=None):
    morphism = TermInterpreter(category, family)(term)
    logger.debug(f"{print_term(term)} in {category}: {morphism}")
    return morphism


def morphisms_equal(category, f, g):
    if category == MONOTONE:
        return f == g
    if category == PAIRS:
        return djg_equal(f, g)
    return f.key() == g.key()
