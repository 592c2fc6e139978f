"""Exception types shared across the package."""


class CogmapError(Exception):
    """Base class for all cogmap errors."""


class MapValidationError(CogmapError):
    """A map violates a structural rule (ids, endpoints, loops, weights)."""


class MapParseError(CogmapError):
    """A map document could not be parsed.

    Carries the input location when known so callers can point at the
    offending line or field.
    """

    def __init__(self, message, line=None, field=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field!r}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.line = line
        self.field = field


class PathExplosion(CogmapError):
    """Simple-path enumeration exceeded the configured cap."""

    def __init__(self, source, sink, cap):
        super().__init__(
            f"more than {cap} simple paths from concept {source} to {sink}; "
            f"raise the path cap to analyze this pair"
        )
        self.source = source
        self.sink = sink
        self.cap = cap


class SingularSystem(CogmapError):
    """The nodal system of a branch network is not solvable.

    Cannot happen for a connected network; indicates an internal
    invariant violation.
    """


class NotPositiveDefinite(CogmapError):
    """A matrix handed to the SPD solver has a non-positive pivot."""


class Unstable(CogmapError):
    """Impulse analysis requested on a map whose spectral radius is >= 1."""

    def __init__(self, spectral_radius):
        super().__init__(
            f"spectral radius {spectral_radius:.3f} >= 1: the impulse series "
            f"diverges; normalize the weights first"
        )
        self.spectral_radius = spectral_radius


class DivergenceDetected(CogmapError):
    """An impulse trajectory exceeded the overflow guard."""

    def __init__(self, step):
        super().__init__(f"impulse trajectory exceeded 1e300 at step {step}")
        self.step = step
