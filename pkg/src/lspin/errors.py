"""Exception hierarchy shared across the package."""


class LspinError(Exception):
    """Base class for every error raised by lspin."""


class UnknownGenerator(LspinError):
    """A character expression referenced a generator that was never declared."""


class InconsistentRelations(LspinError):
    """The declared relation system is degenerate.

    Raised when a relation forces nu^r = 1 with r != 0, mixes ramified with
    unramified generators, or collapses an asserted disequality.
    """


class NotDivisible(LspinError):
    """Exact division of L-factor products failed (a factor was missing)."""


class PoleAtS(LspinError):
    """Numeric evaluation hit a pole of some Tate factor at the sample point."""


class MissingSatakeValue(LspinError):
    """Numeric evaluation needs a Satake value for a generator that has none."""


class ConstraintViolation(LspinError):
    """Representation parameters violate a type-mandated constraint."""


class UnknownType(LspinError):
    """An unrecognised representation type tag."""


class NoBesselModel(LspinError):
    """The requested Bessel datum is not admissible for the representation."""


class GenericInput(LspinError):
    """A non-generic-only operation was called on a generic representation."""


class MalformedAtom(LspinError):
    """A module expression atom was built outside its domain of validity."""


class SnapshotMismatch(LspinError):
    """A regenerated table row differs from the committed snapshot."""


class LspinSyntaxError(LspinError):
    """Session file syntax error, carrying position and offending token."""

    def __init__(self, message: str, line: int, col: int, token: str = ""):
        self.line = line
        self.col = col
        self.token = token
        at = f" (line {line}, col {col}"
        at += f", at {token!r})" if token else ")"
        super().__init__(message + at)
