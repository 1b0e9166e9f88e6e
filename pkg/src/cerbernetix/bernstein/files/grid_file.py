"""Grid functions as CSV files with the columns `x,value`.

The missing values of a function, before its first defined node, are empty fields. The grading
exponent of the grid is kept in a "# gamma: ..." comment.

Examples:
```python
from cerbernetix.bernstein.files import read_grid_function, write_grid_function
from cerbernetix.bernstein.operators import GridFunction, graded_grid

phi = GridFunction.from_function(graded_grid(1.0, 64, 2.0), lambda x: x)

write_grid_function("runs/phi.csv", phi, {"command": "solve-ivp"})
phi = read_grid_function("runs/phi.csv")
```
"""
from __future__ import annotations

import math
from typing import Any, Iterable

import numpy as np

from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.files.csv_file import CSVFile
from cerbernetix.bernstein.operators import Grid, GridFunction

# The columns of a grid function file.
GRID_COLUMNS = ("x", "value")

# The comment holding the grading exponent.
GAMMA_COMMENT = "gamma"


def write_grid_function(
    filename: str, phi: GridFunction, comments: dict | Iterable[tuple[str, Any]] = None
) -> int:
    """Writes a grid function to a CSV file.

    Args:
        filename (str): The path to the file.
        phi (GridFunction): The function.
        comments (dict | Iterable[tuple[str, Any]], optional): The comments written first.
        Defaults to None.

    Raises:
        OSError: If the file cannot be written.

    Returns:
        int: The number of characters written for the rows.
    """
    comments = {**dict(comments or {}), GAMMA_COMMENT: phi.grid.gamma}
    rows = (
        {"x": x, "value": None if index < phi.defined_from else value}
        for index, (x, value) in enumerate(zip(phi.nodes, phi.values))
    )
    return CSVFile(filename, comments=comments, fieldnames=GRID_COLUMNS).write_file(rows)


def _number(row: dict, key: str, filename: str, line: int) -> float:
    try:
        return float(row[key])
    except (TypeError, ValueError) as error:
        raise DomainError(f"{filename}: row {line}: invalid {key} {row.get(key)!r}") from error


def read_grid_function(filename: str) -> GridFunction:
    """Reads a grid function from a CSV file.

    Args:
        filename (str): The path to the file.

    Raises:
        OSError: If the file cannot be read.
        DomainError: If the columns are not `x,value`, a number is malformed, a value is missing
        after a defined one, or the nodes do not make a grid.

    Returns:
        GridFunction: The function, on a grid made of the nodes of the file.
    """
    file = CSVFile(filename)
    rows = file.read_file()

    if not rows or tuple(rows[0].keys()) != GRID_COLUMNS:
        raise DomainError(f"{filename}: a grid function file has the columns x,value")

    nodes = [_number(row, "x", filename, line) for line, row in enumerate(rows, start=1)]
    values = np.full(len(rows), math.nan)
    defined_from = 0
    for line, row in enumerate(rows, start=1):
        if row["value"] in ("", None):
            if defined_from != line - 1:
                raise DomainError(f"{filename}: row {line}: a value is missing")
            defined_from = line
        else:
            values[line - 1] = _number(row, "value", filename, line)

    if defined_from == len(rows):
        raise DomainError(f"{filename}: the function has no value")

    gamma = float(file.comments.get(GAMMA_COMMENT, 1.0))
    return GridFunction(Grid(np.array(nodes), gamma), values, defined_from)
