"""Exception types raised by ttlink.

Every exception carries a short machine-readable ``reason`` so the CLI can
report structured diagnostics.
"""

from __future__ import annotations


class TTLinkError(Exception):
    reason = "error"

    def __init__(self, message: str, *, reason: str | None = None, details=None):
        super().__init__(message)
        if reason is not None:
            self.reason = reason
        self.details = details


class InvalidArgument(TTLinkError, ValueError):
    reason = "invalid-argument"


class InvalidParams(InvalidArgument):
    """Raised by ``validate`` with one message per violated inequality."""

    reason = "invalid-params"

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations), details=list(violations))
        self.violations = list(violations)


class Unsupported(TTLinkError):
    reason = "unsupported"


class NotARootCandidate(InvalidArgument):
    reason = "not-a-root-candidate"


class ReducibleToSatellite(TTLinkError):
    reason = "reducible-to-satellite"


class NotApplicable(TTLinkError):
    reason = "not-applicable"


class WrongCase(TTLinkError):
    reason = "wrong-case"


class InternalError(TTLinkError, RuntimeError):
    reason = "internal-error"
