"""Error types shared across the package.

Encoding can fail in two fundamentally different ways and callers (in
particular the CLI) need to tell them apart: the configured constants may be
too small for the construction to go through on the given graph
(:class:`ConstantsInfeasible`, exit code 2), or the advice may be corrupt /
inconsistent at decode time (:class:`DecodeError`, surfaces as a
verification failure, exit code 3).
"""

from __future__ import annotations


class LocalAdviceError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(LocalAdviceError):
    """Raised when a graph/advice/edge-set file cannot be parsed."""


class InvalidParams(LocalAdviceError):
    """Raised when schema parameters violate a precondition."""


class ConstantsInfeasible(LocalAdviceError):
    """A required inequality between configured constants fails on this input.

    ``inequality`` names the failing condition so that runs can be reported
    honestly instead of silently producing wrong output.
    """

    def __init__(self, inequality: str, detail: str = ""):
        self.inequality = inequality
        self.detail = detail
        msg = f"constants infeasible: {inequality}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DecodeError(LocalAdviceError):
    """Raised when a decoder cannot reconstruct a valid solution.

    ``node`` is the node at which decoding failed (or ``None`` when the
    failure is not attributable to a single node).
    """

    def __init__(self, reason: str, node: int | None = None):
        self.reason = reason
        self.node = node
        where = f" at node {node}" if node is not None else ""
        super().__init__(f"decode failed{where}: {reason}")


class SearchExhausted(LocalAdviceError):
    """Randomized search (shift selection / resampling) ran out of budget."""
