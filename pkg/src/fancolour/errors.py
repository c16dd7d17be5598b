"""Exception types shared across the package.

Two failure families matter to callers: bad input (``InputError`` and
subclasses, CLI exit code 1) and mathematical failures that should never
happen on well-formed input (``InvariantViolation``, ``SolveFailure``,
``NoInterchangePath``, CLI exit code 2).
"""

from __future__ import annotations


class FancolourError(Exception):
    """Base class for every error raised by this package."""


class InputError(FancolourError):
    """Malformed or out-of-contract input."""


class ParseError(InputError):
    """A text or JSON artefact failed to parse.

    ``line`` is the 1-based line number when the source is line oriented.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GuardExceeded(InputError):
    """An exponential-cost routine refused an input above its size guard."""


class InvariantViolation(FancolourError):
    """An internal consistency check failed; the operation was aborted."""


class NoInterchangePath(FancolourError):
    """Exhaustive search found no interchange path under the constraints.

    With list sizes of at least max_degree + 2 this is a bug alarm; with
    smaller lists it is an expected experimental outcome.  ``nodes`` is the
    number of colour decisions the search explored before giving up.
    """

    def __init__(self, message: str, nodes: int):
        super().__init__(f"{message} (explored {nodes} search nodes)")
        self.nodes = nodes


class SolveFailure(FancolourError):
    """The edge-colouring solver got stuck.

    Must never happen when every list has at least max_degree + 2 colours;
    carries enough material to replay the failure.
    """

    def __init__(self, message: str, stuck_edge: int | None = None,
                 trace: list[str] | None = None,
                 repro: dict | None = None):
        super().__init__(message)
        self.stuck_edge = stuck_edge
        self.trace = trace or []
        self.repro = repro
