"""Exception types shared across the package."""


class AnickError(Exception):
    """Base class for package-specific errors."""


class ZeroPolynomial(AnickError):
    """Leading data requested for the zero polynomial."""


class ZeroElement(AnickError):
    """Leading data requested for the zero module element."""


class InvalidPresentation(AnickError):
    """Presentation violates a structural requirement."""


class BoundExceeded(AnickError):
    """Degree bound too small for the requested computation."""


class NotGroebner(AnickError):
    """Rewrite system failed the overlap confluence check."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class NotMinimal(AnickError):
    """Rule leading monomials do not form an anti-chain."""


class NotAnOim(AnickError):
    """Word set is not downward closed under the subword order."""


class NotAnAntichain(AnickError):
    """Word set contains two comparable words."""


class NotInKernel(AnickError):
    """Contracting homotopy applied outside the kernel of the differential."""


class NonTermination(AnickError):
    """Homotopy iteration guard tripped; carries a diagnostic message."""
