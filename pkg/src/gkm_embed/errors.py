"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: input/configuration problems exit 1,
internal invariant failures exit 2, verification failures exit 3.
"""


class GKMError(Exception):
    pass


class ConfigError(GKMError):
    """Unsupported root-system family/rank or bad option value."""


class InputError(GKMError):
    """Invalid user input: non-dominant weight, mixed heights, bad tuple keys..."""


class InvariantError(GKMError):
    """An internal consistency check failed; carries a diagnostic payload."""

    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class VerificationError(GKMError):
    """A computed result failed its validation (e.g. non-integral deconvolution)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}
