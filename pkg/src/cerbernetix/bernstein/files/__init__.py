"""The `files` package provides the readers and writers of the run artifacts.

It contains:
- CSV files with a comment header:
    - `CSVFile(filename, comments, ...)` - Manages read and write for CSV files.
    - `read_csv_file(filename, ...)` - Reads all the rows from a CSV file at once.
    - `write_csv_file(filename, data, comments, ...)` - Writes rows to a CSV file at once.
    - `format_value(value)` - Formats a value for a CSV file, floats with `repr`.
    - `parse_comment(line)` - Parses a comment line "# key: value".
- Grid functions:
    - `write_grid_function(filename, phi, comments)` - Writes a grid function as `x,value` rows.
    - `read_grid_function(filename)` - Reads a grid function.
- File helpers:
    - `get_file_mode(create, append)` - Gives the mode opening a text file.
    - `create_file_path(path)` - Creates the missing folders of an output file.

Examples:
```python
from cerbernetix.bernstein.files import CSVFile, read_grid_function, write_csv_file

# Write rows after a comment header
write_csv_file("runs/summary.csv", rows, comments={"command": "simulate", "seed": 1})

# Read the rows and the comments
file = CSVFile("runs/summary.csv")
rows = file.read_file()
print(file.comments["seed"])    # "1"

# Read the right hand side of an equation
g = read_grid_function("data/g.csv")
```
"""
from cerbernetix.bernstein.files.csv_file import (
    COMMENT_PREFIX,
    CSV_ENCODING,
    CSV_LINE_TERMINATOR,
    CSVFile,
    format_value,
    parse_comment,
    read_csv_file,
    write_csv_file,
)
from cerbernetix.bernstein.files.grid_file import (
    GRID_COLUMNS,
    read_grid_function,
    write_grid_function,
)
from cerbernetix.bernstein.files.path import create_file_path, get_file_mode
