import json
from functools import wraps

from pydantic import ValidationError

from custom_logging.custom_logger import get_logger
from schemas.reports import ObstructionSchema
from utils.exceptions import InvalidInputError, NumericalFailure, ObstructionError, StructuralError

clogger = get_logger()
MODULE_NAME = "CLI"

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_OBSTRUCTION = 2
EXIT_INPUT = 3
EXIT_NUMERIC = 4
EXIT_INTERNAL = 5


def _emit_error(kind: str, message: str, **extra) -> None:
    print(json.dumps({"error": kind, "message": message, **extra}, indent=2))


def handle_command_errors(func):
    """
    Decorator for subcommand handlers
    maps failures to stable exit codes and prints an error object on stdout
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except ObstructionError as e:
            clogger.error(f"[{MODULE_NAME}] {e}")
            obstruction = ObstructionSchema.from_obstruction(e.obstruction)
            _emit_error("obstruction", str(e), obstruction=obstruction.model_dump(mode="json"))
            return EXIT_OBSTRUCTION
        except ValidationError as e:
            clogger.error(f"[{MODULE_NAME}] Schema violation: {e}")
            _emit_error("input", str(e))
            return EXIT_INPUT
        except (InvalidInputError, json.JSONDecodeError) as e:
            clogger.error(f"[{MODULE_NAME}] Invalid input: {e}")
            _emit_error("input", str(e))
            return EXIT_INPUT
        except (FileNotFoundError, IsADirectoryError) as e:
            clogger.error(f"[{MODULE_NAME}] Cannot read input: {e}")
            _emit_error("input", str(e))
            return EXIT_INPUT
        except (NumericalFailure, StructuralError) as e:
            clogger.error(f"[{MODULE_NAME}] Postcondition failed: {e}", exc_info=True)
            _emit_error("numeric", str(e))
            return EXIT_NUMERIC
        except Exception as e:
            clogger.error(f"[{MODULE_NAME}] Unexpected error: {e}", exc_info=True)
            _emit_error("internal", str(e))
            return EXIT_INTERNAL
    return wrapper
