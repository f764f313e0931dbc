# cli/services/terms.py
"""
Morphism terms.

    term := tensor | term ";" tensor          t1;t2 runs t1 first
    tensor := atom | tensor "+" atom
    atom := id(n) | m | u | op(term) | g(labels) | s(i) | f(i) | tw(i)
          | span(tensor; tensor; tensor) | "(" term ")"

s(i) crosses strands i and i+1 of i+1 strands; f(i) and tw(i) act on
the last of i wires. Wider instances are built with "+ id(k)".
"""
import logging
from dataclasses import dataclass

import lark
from lark import v_args

from utils.validators import TermArityError, TermSyntaxError

logger = logging.getLogger(__name__)

GRAMMAR = r"""
    ?start: term
    ?term: tensor
         | term ";" tensor          -> compose
    ?tensor: atom
           | tensor "+" atom        -> tensor
    ?atom: "id" "(" INT ")"         -> identity
         | "m"                      -> mult
         | "u"                      -> unit
         | "op" "(" term ")"        -> op
         | "g" "(" [LABEL ("," LABEL)*] ")" -> labels
         | "s" "(" INT ")"          -> crossing
         | "f" "(" INT ")"          -> flag
         | "tw" "(" INT ")"         -> twist
         | "span" "(" tensor ";" tensor ";" tensor ")" -> span
         | "(" term ")"
    LABEL: /[A-Za-z0-9_]+/

    %import common.INT
    %import common.WS
    %ignore WS
"""

_parser = lark.Lark(GRAMMAR, parser='lalr', propagate_positions=True)

IDENTITY, MULT, UNIT, OP = 'id', 'm', 'u', 'op'
LABELS, CROSSING, FLAG, TWIST = 'g', 's', 'f', 'tw'
COMPOSE, TENSOR, SPAN = ';', '+', 'span'

ATOMS = (IDENTITY, MULT, UNIT, LABELS, CROSSING, FLAG, TWIST)


@dataclass(frozen=True)
class Term:
    """One node of a term; `args` holds integers, label names or subterms"""
    kind: str
    args: tuple = ()

    def __str__(self):
        return print_term(self)


@v_args(inline=True)
class _TermBuilder(lark.Transformer):

    def identity(self, n):
        return Term(IDENTITY, (int(n),))

    def mult(self):
        return Term(MULT)

    def unit(self):
        return Term(UNIT)

    def labels(self, *names):
        return Term(LABELS, tuple(str(name) for name in names if name is not None))

    def crossing(self, i):
        return Term(CROSSING, (int(i),))

    def flag(self, i):
        return Term(FLAG, (int(i),))

    def twist(self, i):
        return Term(TWIST, (int(i),))

    def compose(self, first, second):
        return Term(COMPOSE, (first, second))

    def tensor(self, left, right):
        return Term(TENSOR, (left, right))

    def span(self, in_leg, elt, out_leg):
        return Term(SPAN, (in_leg, elt, out_leg))

    @v_args(meta=True)
    def op(self, meta, children):
        inner = children[0]
        if inner.kind == OP:
            raise TermSyntaxError("op only wraps non-op terms", meta.line, meta.column)
        return Term(OP, (inner,))


# ============= ARITIES =============

def arity(term):
    """(domain, codomain) of a term, or TermArityError naming the ill-typed subterm"""
    kind, args = term.kind, term.args
    if kind == IDENTITY:
        return args[0], args[0]
    if kind == MULT:
        return 2, 1
    if kind == UNIT:
        return 0, 1
    if kind == LABELS:
        return len(args), len(args)
    if kind in (CROSSING, FLAG, TWIST):
        wires = args[0] + 1 if kind == CROSSING else args[0]
        if args[0] < 1:
            raise TermArityError("wire indices start at 1", print_term(term))
        return wires, wires
    if kind == OP:
        n, m = arity(args[0])
        return m, n
    if kind == TENSOR:
        (n1, m1), (n2, m2) = arity(args[0]), arity(args[1])
        return n1 + n2, m1 + m2
    if kind == COMPOSE:
        (n1, m1), (n2, m2) = arity(args[0]), arity(args[1])
        if m1 != n2:
            raise TermArityError(f"{m1} outputs feed {n2} inputs", print_term(term))
        return n1, m2
    if kind == SPAN:
        (p1, n), (p2, q2), (p3, m) = (arity(leg) for leg in args)
        if p2 != q2 or p1 != p2 or p3 != p2:
            raise TermArityError("span legs and element need a common middle", print_term(term))
        return n, m
    raise TermArityError(f"unknown term kind {kind!r}", kind)


# ============= PARSE / PRINT =============

def parse(text):
    """Read a term and check its arities"""
    try:
        tree = _parser.parse(text)
    except lark.exceptions.UnexpectedInput as e:
        raise TermSyntaxError(f"bad term {text!r}", max(e.line, 1), max(e.column, 1)) from None
    try:
        term = _TermBuilder().transform(tree)
    except lark.exceptions.VisitError as e:
        raise e.orig_exc from None
    arity(term)
    logger.debug(f"Parsed {text!r}")
    return term


def _wrapped(term, allowed):
    text = print_term(term)
    return text if term.kind not in allowed else f"({text})"


def print_term(term):
    """Inverse of parse: parse(print_term(t)) == t"""
    kind, args = term.kind, term.args
    if kind in (MULT, UNIT):
        return kind
    if kind == LABELS:
        return f"g({','.join(args)})"
    if kind in (IDENTITY, CROSSING, FLAG, TWIST):
        return f"{kind}({args[0]})"
    if kind == OP:
        return f"op({print_term(args[0])})"
    if kind == COMPOSE:
        return f"{print_term(args[0])};{_wrapped(args[1], (COMPOSE,))}"
    if kind == TENSOR:
        return f"{_wrapped(args[0], (COMPOSE,))}+{_wrapped(args[1], (COMPOSE, TENSOR))}"
    if kind == SPAN:
        return f"span({'; '.join(_wrapped(leg, (COMPOSE,)) for leg in args)})"
    raise TermArityError(f"unknown term kind {kind!r}", kind)


def compose_terms(terms):
    """t1;t2;...; the first term runs first"""
    result = terms[0]
    for term in terms[1:]:
        result = Term(COMPOSE, (result, term))
    arity(result)
    return result


# ============= SAMPLING =============

def random_term(rng, depth=3, labels=('e',), ops=True):
    """A random term tree, not necessarily well typed"""
    if depth == 0 or rng.random() < 0.3:
        kind = rng.choice(ATOMS)
        if kind in (MULT, UNIT):
            return Term(kind)
        if kind == LABELS:
            return Term(LABELS, tuple(rng.choice(labels) for _ in range(rng.randint(0, 3))))
        return Term(kind, (rng.randint(1 if kind != IDENTITY else 0, 3),))
    choice = rng.choice((COMPOSE, TENSOR, OP) if ops else (COMPOSE, TENSOR))
    if choice == OP:
        inner = random_term(rng, depth - 1, labels, ops=False)
        return Term(OP, (inner,))
    return Term(choice, (random_term(rng, depth - 1, labels, ops), random_term(rng, depth - 1, labels, ops)))
