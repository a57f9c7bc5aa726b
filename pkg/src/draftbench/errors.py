"""Exception hierarchy shared across the harness.

Everything user-facing derives from :class:`DraftbenchError` so the CLI can
separate user/config mistakes (exit 1) and aborted runs (exit 2) from bugs.
"""


class DraftbenchError(Exception):
    """Base class for all harness errors."""


class ConfigError(DraftbenchError):
    """Invalid flags, config file values, or run configuration."""


# --- prompt construction -------------------------------------------------

class ShapeMismatch(DraftbenchError):
    """Exemplar reasoning presence contradicts the prompt strategy."""


class InsufficientExemplars(DraftbenchError):
    """Requested more shots than the exemplar pool provides."""


# --- dataset / file parsing ----------------------------------------------

class ParseError(DraftbenchError):
    """A data file failed to parse; message carries file and position."""

    def __init__(self, message: str, path=None, line: int | None = None):
        loc = ""
        if path is not None:
            loc = f"{path}: "
        if line is not None:
            loc += f"line {line}: "
        super().__init__(loc + message)
        self.path = path
        self.line = line


class MissingGoldMarker(ParseError):
    """GSM8K record whose answer text lacks the '####' gold marker."""


class AmbiguousGold(ParseError):
    """BIG-bench entry where more than one target key scores 1."""


class PoolTooSmall(DraftbenchError):
    """Name pool smaller than the per-example flipper count."""


class EmptyResponse(DraftbenchError):
    """Model response was empty or all whitespace."""


class Unnormalizable(DraftbenchError):
    """No candidate answer token found; scored incorrect, never fatal."""


# --- chat client ----------------------------------------------------------

class ClientError(DraftbenchError):
    """Base for provider/transport failures."""


class AuthError(ClientError):
    """Missing or rejected credentials."""


class RateLimited(ClientError):
    """Provider kept rate-limiting until retries were exhausted."""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


class ProviderError(ClientError):
    """Non-retryable provider failure (or retries exhausted on 5xx)."""

    def __init__(self, message: str, status: int | None = None, body: str = ""):
        excerpt = body[:200]
        detail = message
        if status is not None:
            detail = f"{message} (status {status})"
        if excerpt:
            detail = f"{detail}: {excerpt}"
        super().__init__(detail)
        self.status = status
        self.body = excerpt


class RequestTimeout(ClientError):
    """HTTP request timed out after retries."""


class MalformedResponse(ClientError):
    """Provider returned a document the decoder cannot read."""


class FixtureMiss(ClientError):
    """Scripted provider has no recorded response for the request key."""


# --- metrics / report -----------------------------------------------------

class EmptyInput(DraftbenchError):
    """Aggregation called on an empty record set."""


class MixedTasks(DraftbenchError):
    """Table rendering requires summaries from a single task."""


# --- runner ---------------------------------------------------------------

class CorruptLog(DraftbenchError):
    """A non-final run-log line is malformed."""


class RunAborted(DraftbenchError):
    """A cell's error rate crossed the abort threshold."""
