"""Exception types raised across the package."""


class DiagsurfError(ValueError):
    """Base class for all errors raised by diagsurf."""


class NotPrime(DiagsurfError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class SizeExceeded(DiagsurfError):
    def __init__(self, what, size, bound):
        super().__init__(f"{what}: size {size} exceeds configured bound {bound}")
        self.size = size
        self.bound = bound


class NotADivisor(DiagsurfError):
    def __init__(self, d, order):
        super().__init__(f"d={d} does not divide {order}")
        self.d = d
        self.order = order


class ZeroToNonpositive(DiagsurfError):
    def __init__(self, e):
        super().__init__(f"0 raised to non-positive exponent {e}")


class BadParams(DiagsurfError):
    pass


class InexactDivision(DiagsurfError):
    pass
