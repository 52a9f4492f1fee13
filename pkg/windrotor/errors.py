"""
Error hierarchy for the rotor design toolkit.

main.py maps these onto process exit codes.
"""

from typing import Optional


class RotorDesignError(Exception):
    """Base class for every error raised by windrotor"""


class ConfigurationError(RotorDesignError):
    """Invalid configuration, empty polar set, empty grid or too few stations"""


class OutOfRangeError(RotorDesignError):
    """A value lies outside the domain an operation may evaluate"""


class InfeasibleMarginError(RotorDesignError):
    """The requested lift coefficient cannot be reached on the rising branch"""


class InputFormatError(RotorDesignError):
    """Malformed CSV input"""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.line = line
        self.path = path
        location = ""
        if path:
            location = f"{path}"
        if line is not None:
            location = f"{location}:{line}" if location else f"line {line}"
        super().__init__(f"{location}: {message}" if location else message)
