"""The `logging` package sets up the log of the command line runs.

It contains:
- `setup_logging(level, filename, log_format)` - Setup the root logger, to stderr or to a file.
- `get_log_level(verbosity)` - Gets the log level for a count of -v minus a count of -q.
- `handle_uncaught_exceptions()` - Installs a collector for logging uncaught exceptions.

Examples:
```python
import logging

from cerbernetix.bernstein.logging import get_log_level, setup_logging

setup_logging(get_log_level(1), "runs/simulate.log")

logger = logging.getLogger(__name__)
logger.info("Simulation started")
```
"""
from cerbernetix.bernstein.logging.config import (
    LOG_ENCODING,
    LOG_FORMAT,
    LOG_LEVEL,
    LOG_LEVELS,
    get_log_level,
    handle_uncaught_exceptions,
    setup_logging,
)
