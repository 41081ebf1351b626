"""Typed failure modes shared across the solver modules."""


class WsdiracError(Exception):
    """Base class for all solver-specific failures."""


class DegenerateSuperpotential(WsdiracError):
    """The superpotential slope parameter B vanishes; the factorization ansatz collapses."""


class LadderSingular(WsdiracError):
    """A shifted ladder parameter B - i/a vanishes, making a remainder term undefined."""


class NoRealRoot(WsdiracError):
    """The energy quadratic has no real root (complex-eigenvalue regime)."""


class NotNormalizable(WsdiracError):
    """The analytic radial function grows at large r (A >= 0) and cannot be normalized."""


class NotBoundRegime(WsdiracError):
    """The asymptotic coefficient of the radial equation is non-positive at this trial energy."""


class IntegrationBlowup(WsdiracError):
    """The shooting integration overflowed despite in-flight renormalization."""


class NoEigenvalueInBracket(WsdiracError):
    """The shooting scan found no eigenvalue inside the requested energy bracket."""
