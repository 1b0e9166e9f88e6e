"""Helpers for the paths of the output files.

Examples:
```python
from cerbernetix.bernstein.files import create_file_path, get_file_mode

create_file_path("runs/stable05/solution.csv")  # "runs/stable05"
get_file_mode(create=True)                      # "wt"
```
"""
from __future__ import annotations

import logging
from pathlib import Path

logger = logging.getLogger(__name__)


def get_file_mode(create: bool = False, append: bool = False) -> str:
    """Gives the mode opening a text file.

    Args:
        create (bool, optional): Writes the file, replacing it. Defaults to False.
        append (bool, optional): Adds to the end of the file, winning over create.
        Defaults to False.

    Returns:
        str: "at", "wt" or "rt", as expected by `open`.
    """
    if append:
        return "at"
    return "wt" if create else "rt"


def create_file_path(path: str) -> str:
    """Creates the missing folders of an output file.

    Args:
        path (str): The path to the file.

    Raises:
        OSError: If a folder cannot be created, or a file stands in the way.

    Returns:
        str: The folder of the file.
    """
    folder = Path(path).parent
    if not folder.is_dir():
        logger.debug("Creating the folder %s", folder)
        folder.mkdir(parents=True, exist_ok=True)
    return str(folder)
