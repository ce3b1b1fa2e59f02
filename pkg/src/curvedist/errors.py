"""Exception hierarchy.

Every failure mode the library promises to report precisely gets its own
class so callers (and the CLI exit-code mapping) can dispatch on type.
"""


class CurvedistError(Exception):
    """Base class for all library errors."""


class InputError(CurvedistError):
    """Bad user input: parse errors, malformed JSON, invalid curve data."""


class ParseError(InputError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnknownVariable(ParseError):
    pass


class ExponentOverflow(ParseError):
    pass


class QuadraticFieldMismatch(CurvedistError):
    """Arithmetic attempted between Scalars over different Q(sqrt k)."""


class UnsupportedScalar(CurvedistError):
    """Operation requires rational coefficients but got a sqrt(k) Scalar."""


class SqrtUnrepresentable(CurvedistError):
    """Square root does not live in any supported quadratic extension."""


class ZeroPolynomial(CurvedistError):
    pass


class DegreeError(CurvedistError):
    """Polynomial has the wrong degree/shape for the requested operation."""


class NormalFormError(InputError):
    """Curve is not in the normal form a closed-form family requires."""


class PreconditionError(CurvedistError):
    """Documented operation precondition violated by the arguments."""


class AssumptionViolation(PreconditionError):
    """A numbered normalization assumption does not hold.

    `item` carries the assumption tag, e.g. "(5)".
    """

    def __init__(self, item: str, message: str = ""):
        super().__init__(f"assumption {item} violated" + (f": {message}" if message else ""))
        self.item = item


class ExcludedPair(CurvedistError):
    """Curve pair excluded from the main theorem: parallel lines,
    orthogonal lines, or concentric circles."""

    def __init__(self, case: str):
        super().__init__(f"excluded pair: {case}")
        self.case = case


class Contradiction(CurvedistError):
    """A certificate computation reached a provably impossible case."""


class BudgetExceeded(CurvedistError):
    """A configured size/degree/retry budget ran out. Never silent."""


class EliminationBudget(BudgetExceeded):
    """Polynomial elimination exceeded its configured budget."""


class NonGenericSeed(CurvedistError):
    """A seeded random choice failed a genericity check (retryable)."""
