# braids/services/syntax.py
"""Text form of braid and ribbon words: "tw(1,0,2) s1 s2' s1", "e" for the identity"""
import lark
from lark import v_args

from utils.validators import TermSyntaxError

from .braid_word import BraidWord
from .ribbon import RibbonBraid

GRAMMAR = r"""
    start: twists? (letter+ | "e")?
    twists: "tw" "(" [SIGNED_INT ("," SIGNED_INT)*] ")"
    letter: "s" INT PRIME?
    PRIME: "'"

    %import common.INT
    %import common.SIGNED_INT
    %import common.WS
    %ignore WS
"""

_parser = lark.Lark(GRAMMAR, parser='lalr')


@v_args(inline=True)
class _BraidTransformer(lark.Transformer):

    def twists(self, *values):
        return ('twists', tuple(int(v) for v in values if v is not None))

    def letter(self, index, prime=None):
        return -int(index) if prime else int(index)

    def start(self, *items):
        twists = None
        letters = []
        for item in items:
            if isinstance(item, tuple):
                twists = item[1]
            else:
                letters.append(item)
        return twists, tuple(letters)


def _parse(text):
    try:
        tree = _parser.parse(text)
    except lark.exceptions.UnexpectedInput as e:
        raise TermSyntaxError(f"bad braid word {text!r}", max(e.line, 1), max(e.column, 1)) from None
    return _BraidTransformer().transform(tree)


def parse_braid(text, strands=None):
    """Read a braid word; without `strands` the smallest fitting count is used"""
    twists, letters = _parse(text)
    if twists is not None:
        raise TermSyntaxError(f"twists are only allowed in ribbon braids: {text!r}")
    if strands is None:
        strands = max((abs(letter) for letter in letters), default=0) + 1
    return BraidWord(strands, letters)


def parse_ribbon(text, strands=None):
    twists, letters = _parse(text)
    if strands is None:
        strands = len(twists) if twists else max((abs(letter) for letter in letters), default=0) + 1
    if twists is None:
        twists = (0,) * strands
    return RibbonBraid(BraidWord(strands, letters), twists)
