class NotReadyError(RuntimeError):
    """Raised when a competence query arrives before any data is available."""


class StreamFormatError(ValueError):
    """Raised when a stream file cannot be parsed."""
