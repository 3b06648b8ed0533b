"""Exception hierarchy shared across the package."""


class ParetoboxError(Exception):
    """Base class for all package errors."""


class ConfigError(ParetoboxError):
    """Config text violates the schema or a field fails validation."""


class ValidationError(ParetoboxError):
    """A domain object violates one of its invariants."""


class EvaluatorError(ParetoboxError):
    """Base class for evaluation failures."""


class EvaluatorTimeout(EvaluatorError):
    """The external evaluator did not answer within the timeout."""


class ProtocolError(EvaluatorError):
    """Malformed response, id mismatch, or missing metric on the wire."""


class ChildExitedError(EvaluatorError):
    """The evaluator child process terminated unexpectedly."""


class ChildReportedError(EvaluatorError):
    """The evaluator child answered with an error payload."""
