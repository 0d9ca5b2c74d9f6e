"""Exception types raised by the toolkit."""


class MamindaError(Exception):
    pass


class DivisionByZeroConstantTerm(MamindaError, ZeroDivisionError):
    pass


class BadConstantTerm(MamindaError, ValueError):
    pass


class BranchCutHit(MamindaError, ValueError):
    pass


class QuadratureFailure(MamindaError, ArithmeticError):
    pass


class TruncationNotConverged(MamindaError, ArithmeticError):
    pass


class NoSignChange(MamindaError, ValueError):
    pass


class MaxIterationsExceeded(MamindaError, RuntimeError):
    pass


class PredicateNotMonotone(MamindaError, ValueError):
    pass


class ParameterOutOfRange(MamindaError, ValueError):
    pass


class GridTooCoarse(MamindaError, ValueError):
    pass


class EvaluatorSingularity(MamindaError, ArithmeticError):
    pass


class UnknownSpec(MamindaError, KeyError):
    pass
