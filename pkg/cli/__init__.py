from cli.error_handler import (
    EXIT_INPUT,
    EXIT_NUMERIC,
    EXIT_OBSTRUCTION,
    EXIT_OK,
    EXIT_REJECTED,
    handle_command_errors,
)
from cli.parser import build_parser

__all__ = [
    "EXIT_INPUT",
    "EXIT_NUMERIC",
    "EXIT_OBSTRUCTION",
    "EXIT_OK",
    "EXIT_REJECTED",
    "build_parser",
    "handle_command_errors",
]
