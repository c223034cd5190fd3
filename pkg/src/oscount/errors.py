"""Error hierarchy shared by every module.

Each class carries the process exit code used by the CLI:
1 invalid input, 2 computation cap exceeded, 3 mathematical/oracle
inconsistency.
"""

from __future__ import annotations


class OscountError(Exception):
    exit_code = 1


class InvalidInputError(OscountError):
    """Malformed or out-of-domain input (bad file, zero normal, mixed fields, ...)."""

    exit_code = 1


class UnsupportedFoldingError(InvalidInputError):
    """A parabolic class whose diagram action cannot be derived and has no
    catalog override."""

    exit_code = 1


class ComputationCapError(OscountError):
    """A configurable resource cap was exceeded; never a silent truncation."""

    exit_code = 2

    def __init__(self, message: str, partial: dict | None = None):
        super().__init__(message)
        self.partial = partial or {}


class MathematicalInconsistencyError(OscountError):
    """Two routes that must agree did not, or an integrality guarantee failed."""

    exit_code = 3


class OracleDisagreementError(MathematicalInconsistencyError):
    """An independent oracle contradicted the primary computation."""

    exit_code = 3
