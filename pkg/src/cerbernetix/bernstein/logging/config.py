"""Logging setup for the command line.

The library modules only create their loggers with `logging.getLogger(__name__)`, the handlers are
installed by the command line.

Examples:
```python
from cerbernetix.bernstein.logging import handle_uncaught_exceptions, setup_logging

setup_logging(verbosity=1)
handle_uncaught_exceptions()
```
"""
import logging
import sys

# The default format for the log lines
LOG_FORMAT = "%(asctime)s %(levelname)s:%(name)s:%(message)s"

# The default data encoding for log files
LOG_ENCODING = "utf-8"

# The log level without -v or -q
LOG_LEVEL = logging.WARNING

# The log levels from the quietest to the most verbose
LOG_LEVELS = (logging.CRITICAL, logging.ERROR, logging.WARNING, logging.INFO, logging.DEBUG)


def get_log_level(verbosity: int = 0) -> int:
    """Gets the log level for a verbosity.

    Each unit of verbosity moves one level from the default WARNING: 1 is INFO, 2 is DEBUG, -1 is
    ERROR. The levels beyond DEBUG and CRITICAL are clamped.

    Args:
        verbosity (int, optional): The count of -v minus the count of -q. Defaults to 0.

    Returns:
        int: The log level.

    Examples:
    ```python
    from cerbernetix.bernstein.logging import get_log_level

    print(get_log_level(1))    # 20, logging.INFO
    ```
    """
    index = LOG_LEVELS.index(LOG_LEVEL) + int(verbosity)
    return LOG_LEVELS[min(max(index, 0), len(LOG_LEVELS) - 1)]


def setup_logging(
    level: int = LOG_LEVEL,
    filename: str = None,
    log_format: str = LOG_FORMAT,
    encoding: str = LOG_ENCODING,
) -> None:
    """Setup the root logger for a command line run.

    The log goes to stderr, or to a file when a filename is given. Any handler installed before is
    replaced.

    Args:
        level (int, optional): The log level to accept. Defaults to LOG_LEVEL.
        filename (str, optional): The filename of the log file. Defaults to None.
        log_format (str, optional): The format for each log event. Defaults to LOG_FORMAT.
        encoding (str, optional): The file encoding. Defaults to LOG_ENCODING.

    Examples:
    ```python
    import logging

    from cerbernetix.bernstein.logging import setup_logging

    setup_logging(logging.DEBUG, "runs/solve.log")
    ```
    """
    options = {"filename": filename, "encoding": encoding} if filename else {"stream": sys.stderr}
    logging.basicConfig(level=level, format=log_format, force=True, **options)


def handle_uncaught_exceptions() -> None:  # pragma: no cover
    """Installs a collector for logging uncaught exceptions.

    When an exception is not handled in the code, it will be logged with the message:
    'Uncaught exception: <exception message>'.

    Examples:
    ```python
    from cerbernetix.bernstein.logging import handle_uncaught_exceptions

    handle_uncaught_exceptions()
    ```
    """

    def error_handler(self, value, traceback):
        logging.exception("Uncaught exception: %s", value)
        sys.__excepthook__(self, value, traceback)

    sys.excepthook = error_handler
