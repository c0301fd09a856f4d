"""Exception types shared by the library, the CLI and the HTTP API.

Every error carries a stable ``code`` string so the CLI and the API can
report the same reason for the same bad input.
"""

from __future__ import annotations


class PcmError(Exception):
    code = "error"

    def __init__(self, message: str, *, field: str | None = None):
        super().__init__(message)
        self.field = field


class InvalidArgument(PcmError, ValueError):
    code = "invalid-argument"


class InvalidRange(PcmError, ValueError):
    code = "invalid-range"


class UnknownPreset(PcmError, LookupError):
    code = "unknown-preset"


class DecodeError(PcmError, ValueError):
    code = "decode-error"


class InternalInconsistency(PcmError, RuntimeError):
    code = "internal-inconsistency"


class UnknownSession(PcmError, LookupError):
    code = "unknown-session"
