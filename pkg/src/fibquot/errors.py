"""Exception types raised by the library."""


class NotInvertible(ArithmeticError):
    """The element has no multiplicative inverse for the given modulus."""


class InvalidModulus(ValueError):
    """The modulus violates a precondition (too small, or wrong parity)."""


class InvalidArgument(ValueError):
    """An argument violates a documented precondition."""


class RangeTooLarge(ValueError):
    """A prime range exceeds the configured scan ceiling."""


class IndexOutOfRange(ValueError):
    """A harmonic-number index reaches past the usable range 0..p-1."""


class BaseDivisibleByP(ValueError):
    """Fermat quotient requested for a base divisible by p."""


class DivisibilityViolation(ArithmeticError):
    """An exact integer division that is mathematically guaranteed failed.

    Raised instead of returning garbage; seeing this means an arithmetic
    bug, never a property of the inputs.
    """


class NoConsistentConvention(RuntimeError):
    """Neither sign convention reproduces the quotient on the calibration set."""


class ConfigError(ValueError):
    """A scan configuration violates its invariants."""
