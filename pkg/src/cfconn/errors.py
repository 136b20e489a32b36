"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class CfConnError(Exception):
    """Base class for all library errors."""


class ValidationError(CfConnError, ValueError):
    """Input violates a structural requirement (range, simplicity, domain)."""


class ParseError(ValidationError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DisconnectedError(CfConnError):
    """An operation that needs a connected graph received a disconnected one."""


class CapExceededError(CfConnError):
    """Exhaustive search refused because the input is above a size cap."""

    def __init__(self, cap, limit, value):
        self.cap = cap
        self.limit = limit
        self.value = value
        super().__init__(f"{cap}={limit} exceeded (got {value}); raise the cap explicitly to proceed")
