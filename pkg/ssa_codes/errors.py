"""
Error Handling
Exception hierarchy and the mapping from failures to CLI exit statuses
"""
from enum import Enum
from typing import Any, Dict

from ssa_codes.logger import ssa_logger


class SsaError(ValueError):
    """Base class for every failure raised by the library"""


class SequenceParseError(SsaError):
    """Invalid DNA text, bad width, or an out-of-bounds window"""


class ParameterError(SsaError):
    """A parameter outside the domain of an operation"""


class BudgetExceededError(ParameterError):
    """Request outside an exhaustive regime"""


class NotACodewordError(SsaError):
    """Decoding failed: the word is not produced by the encoder"""


class ErrorType(str, Enum):
    """Error classification"""
    USAGE = "usage"
    PARSE = "parse"
    BUDGET = "budget"
    NOT_A_CODEWORD = "not_a_codeword"
    PROPERTY_FAILED = "property_failed"
    UNKNOWN = "unknown"


class CliErrorHandler:
    """
    Classify library errors and decide how the CLI reports them
    """

    # Exit statuses
    EXIT_STATUSES = {
        ErrorType.USAGE: 2,
        ErrorType.PARSE: 2,
        ErrorType.BUDGET: 2,
        ErrorType.NOT_A_CODEWORD: 3,
        ErrorType.PROPERTY_FAILED: 1,
        ErrorType.UNKNOWN: 2,
    }

    USER_MESSAGES = {
        ErrorType.USAGE: "invalid parameters",
        ErrorType.PARSE: "could not parse input",
        ErrorType.BUDGET: "request exceeds the exhaustive budget",
        ErrorType.NOT_A_CODEWORD: "not a codeword",
        ErrorType.PROPERTY_FAILED: "property does not hold",
        ErrorType.UNKNOWN: "unexpected error",
    }

    def classify_error(self, error: Exception) -> ErrorType:
        """
        Classify error into specific type

        Args:
            error: Exception object

        Returns:
            ErrorType enum
        """
        # order matters: BudgetExceededError is a ParameterError
        if isinstance(error, NotACodewordError):
            return ErrorType.NOT_A_CODEWORD
        if isinstance(error, BudgetExceededError):
            return ErrorType.BUDGET
        if isinstance(error, SequenceParseError):
            return ErrorType.PARSE
        if isinstance(error, (ParameterError, ValueError, OSError)):
            return ErrorType.USAGE

        ssa_logger.warning(f"Error could not be classified: {error!r}")
        return ErrorType.UNKNOWN

    def get_exit_status(self, error_type: ErrorType) -> int:
        return self.EXIT_STATUSES.get(error_type, 2)

    def get_user_message(self, error_type: ErrorType) -> str:
        return self.USER_MESSAGES.get(error_type, "error")

    def get_technical_details(self, error: Exception, error_type: ErrorType) -> Dict[str, Any]:
        """
        Get technical error details for logging
        """
        return {
            'error_type': error_type,
            'error_class': error.__class__.__name__,
            'error_message': str(error),
            'exit_status': self.get_exit_status(error_type),
            'user_message': self.get_user_message(error_type)
        }


def log_error_details(error: Exception) -> int:
    """
    Log the classified error and return the exit status the CLI should use
    """
    handler = CliErrorHandler()
    error_type = handler.classify_error(error)
    details = handler.get_technical_details(error, error_type)

    ssa_logger.error(
        f"{details['user_message']}: {details['error_message']} "
        f"({details['error_class']}, exit {details['exit_status']})"
    )
    return details['exit_status']
