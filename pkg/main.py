import sys
from typing import List, Optional

from cli.parser import build_parser
from config import APP_NAME, VERSION
from custom_logging.custom_logger import get_logger

clogger = get_logger()
MODULE_NAME = "MAIN"


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    clogger.debug(f"[{MODULE_NAME}] {APP_NAME} {VERSION}: {args.command}")
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
