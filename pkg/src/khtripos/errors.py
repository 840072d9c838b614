"""Exception hierarchy shared by every module."""


class TriposError(Exception):
    """Base class for all errors raised by khtripos."""


class DuplicateLabel(TriposError, ValueError):
    pass


class NotATopology(TriposError, ValueError):
    """A family of subsets fails one of the topology axioms.

    ``witness`` describes the failing axiom, e.g.
    ``{"axiom": "union", "left": [0], "right": [1]}``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class NotContinuous(TriposError, ValueError):
    def __init__(self, message, open_set=None):
        super().__init__(message)
        self.open_set = open_set


class NotClopen(TriposError, ValueError):
    pass


class SpaceMismatch(TriposError, ValueError):
    pass


class SizeCap(TriposError):
    """A construction would exceed the configured point cap."""


class NotClopenMap(TriposError, ValueError):
    pass


class NotDiscreteBase(TriposError, ValueError):
    pass


class NotAPullback(TriposError, ValueError):
    pass


class VerificationFailed(TriposError):
    """An optional self-check of a construction did not hold."""


class FormulaSyntaxError(TriposError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownSpace(TriposError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown space"


class UnboundVariable(TriposError, NameError):
    pass


class FormulaTypeError(TriposError, TypeError):
    pass


class ModelIOError(TriposError, OSError):
    pass


class SchemaError(TriposError, ValueError):
    pass


class ValidationError(TriposError, ValueError):
    """A model item breaks an invariant; ``item`` and ``invariant`` say which."""

    def __init__(self, message, item=None, invariant=None):
        super().__init__(message)
        self.item = item
        self.invariant = invariant
