# utils/validators.py
"""
Exceptions and precondition checks shared by every app.

All domain errors derive from ValueError so service callers can keep
catching the builtin.
"""


class PropcalcError(ValueError):
    """Base class for calculus errors"""


class ArityError(PropcalcError):
    """Boundary, length, strand-count or dimension mismatch"""


class GroupMismatchError(ArityError):
    """Operands live over different label groups, flag modes or families"""


class InvalidDataError(PropcalcError):
    """Malformed input data"""


class RewriteError(PropcalcError):
    """The cospan rewriting engine ran out of its step budget"""


class EvaluationSizeError(PropcalcError):
    """A matrix evaluation would exceed MAX_TENSOR_ENTRIES"""


class TermSyntaxError(InvalidDataError):
    """Parse error with a 1-based source position"""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class TermArityError(ArityError):
    """Ill-typed term; carries the offending subterm text"""

    def __init__(self, message, subterm=''):
        super().__init__(f"{message}: {subterm}" if subterm else message)
        self.subterm = subterm


def require_arity(actual, expected, what='arity'):
    if actual != expected:
        raise ArityError(f"{what} mismatch: got {actual}, expected {expected}")


def require_same_group(left, right):
    if left is not right and left != right:
        raise GroupMismatchError(f"label groups differ: {left.name} vs {right.name}")


def require_index(value, bound, what='index'):
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < bound:
        raise InvalidDataError(f"{what} {value!r} out of range 0..{bound - 1}")


def require_bijection(perm):
    if sorted(perm) != list(range(len(perm))):
        raise InvalidDataError(f"not a bijection: {list(perm)}")
