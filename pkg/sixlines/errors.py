"""
errors.py – Exception types shared by the library and the CLI.

InputError maps to exit code 2, PreconditionError to exit code 3.
"""


class SixLinesError(Exception):
    """Base class for every error raised on purpose by sixlines."""

    exit_code = 1


class InputError(SixLinesError):
    """Malformed request: bad JSON, unknown keys, bad rational literals."""

    exit_code = 2


class PreconditionError(SixLinesError):
    """A named mathematical precondition does not hold."""

    exit_code = 3

    def __init__(self, rule: str, message: str):
        super().__init__(message)
        self.rule = rule

    def __str__(self):
        return f'{self.rule}: {self.args[0]}'
