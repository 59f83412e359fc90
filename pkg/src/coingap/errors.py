"""Exception types shared across the package."""


class CoinGapError(Exception):
    """Base class for all coingap errors."""


class CoinSetError(CoinGapError, ValueError):
    """Invalid coin set input."""


class EmptyInput(CoinSetError):
    """No denominations found in the input."""


class MalformedToken(CoinSetError):
    """A token in the input is not an integer."""


class NonPositiveCoin(CoinSetError):
    """A denomination is zero or negative."""


class CoinTooLarge(CoinSetError):
    """A denomination does not fit in an unsigned 64-bit word."""


class GcdNotOne(CoinGapError, ValueError):
    """Denominations share a common factor, so the gap set is infinite."""

    def __init__(self, g: int):
        self.g = g
        super().__init__(f"gcd is {g}; a finite Frobenius number requires gcd 1")


class GuardExceeded(CoinGapError, RuntimeError):
    """A brute-force guard limit was exceeded; refusing to run."""
