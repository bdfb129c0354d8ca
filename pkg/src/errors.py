"""Exception hierarchy. Every error knows the CLI exit code it maps to."""

from fractions import Fraction


class PolyRatError(Exception):
    """Base class for all workbench errors."""

    exit_code = 4


# Input errors (exit 1)


class InputError(PolyRatError):
    exit_code = 1


class ParseError(InputError):
    """Expression text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ArityError(InputError):
    """An operator was given the wrong number of arguments (e.g. an empty shuffle)."""


class FormatError(InputError):
    """A JSON document does not match its file format."""


class ConfigError(InputError):
    """An environment variable holds an unusable value."""


# Class / fragment errors (exit 2)


class ClassError(PolyRatError):
    exit_code = 2


class DomainError(ClassError, ValueError):
    """An operation was called outside its mathematical domain."""


class FragmentError(ClassError):
    """An expression uses an operator outside the fragment a construction accepts."""


class ClassMismatch(ClassError):
    """An automaton is not in the ambiguity class an operation requires."""


class ExponentialAmbiguity(ClassError):
    """A state lies on two distinct cycles."""

    def __init__(self, state: int):
        super().__init__(f"state {state} lies on two distinct cycles (exponentially ambiguous)")
        self.state = state


class StarUndefined(ClassError):
    """Kleene star applied to a sequence whose term 0 is nonzero."""


class OutputUndefined(ClassError):
    """A register machine has no output at the state it reached."""

    def __init__(self, state: int):
        super().__init__(f"output function is undefined at state {state}")
        self.state = state


class NotCopyless(ClassError):
    def __init__(self, register: str, state: int):
        super().__init__(f"register {register} is used more than once in the update of state {state}")
        self.register = register
        self.state = state


class NoNormalFormOrder(ClassError):
    def __init__(self, cycle: tuple[str, ...]):
        super().__init__("no register order fits every update; dependency cycle " + " -> ".join(cycle))
        self.cycle = cycle


class NotPolyRational(ClassError):
    """A denominator factor divides no binomial 1 - λx^ℓ with ℓ up to the exponent bound."""

    def __init__(self, witness, max_ell: int):
        super().__init__(f"not poly-rational up to exponent bound {max_ell}; stuck factor {witness}")
        self.witness = witness
        self.max_ell = max_ell


class NoConversionPath(ClassError):
    pass


# Internal errors (exit 4)


class CrossCheckError(PolyRatError):
    """Two representations that should agree disagree on a term."""

    def __init__(self, what: str, index: int, expected: Fraction, got: Fraction):
        super().__init__(f"{what}: term {index} differs (expected {expected}, got {got})")
        self.index = index
        self.expected = expected
        self.got = got


class StabilizationError(PolyRatError):
    def __init__(self, register: str, bound: int):
        super().__init__(f"register {register} did not stabilise within {bound} steps")
        self.register = register
        self.bound = bound


class BudgetExceeded(PolyRatError):
    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} exceeded the budget of {limit}")
        self.limit = limit
