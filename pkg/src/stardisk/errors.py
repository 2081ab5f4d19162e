"""Exception types shared across the package."""


class StardiskError(Exception):
    """Base class for every error raised by this package."""


class DiskDomainError(StardiskError, ValueError):
    """An evaluation point lies outside the open unit disk."""


class ParameterDomainError(StardiskError, ValueError):
    """A parameter is outside its admissible range."""


class PoleError(StardiskError, ArithmeticError):
    """A Mobius map was evaluated at (or numerically on) its pole."""


class FunctionZeroError(StardiskError, ArithmeticError):
    """f vanishes away from the origin, so z f'/f is singular there."""


class CriticalPointError(StardiskError, ArithmeticError):
    """f' vanishes, so 1 + z f''/f' is singular there."""


class DegenerateSchwarzError(StardiskError, ArithmeticError):
    """|w| is numerically zero where a boundary probe needs it."""
