"""A simple API for reading and writing the CSV files of the runs.

The files start with comment lines "# key: value" describing the run that produced them. The
numbers are written with `repr`, so that a file can be read back without losing digits, and the
lines end with "\\n" on every platform.

Examples:
```python
from cerbernetix.bernstein.files import CSVFile, read_csv_file, write_csv_file

filename = 'runs/stable05/sonine.csv'
rows = [
    {'x': 0.25, 'K': 0.5641895835477563},
    {'x': 1.0, 'K': 1.1283791670955126},
]

# Write the rows at once, after a comment header
write_csv_file(filename, rows, comments={'command': 'sonine', 'q': 0.6366197723675814})

# Read the rows at once, the values are strings
rows = read_csv_file(filename)

# Read the comments as well
csv = CSVFile(filename)
rows = csv.read_file()
print(csv.comments['q'])    # "0.6366197723675814"

# Write the file row by row
with csv.open(create=True):
    for row in rows:
        csv.write(row)
```
"""
from __future__ import annotations

import csv
from typing import Any, Iterable, Iterator

import numpy as np

from cerbernetix.bernstein.files.path import create_file_path, get_file_mode

# The encoding of the CSV files.
CSV_ENCODING = "utf-8"

# The CSV dialect of the files.
CSV_DIALECT = "excel"

# The line terminator of the files, on every platform.
CSV_LINE_TERMINATOR = "\n"

# The prefix of the comment lines.
COMMENT_PREFIX = "#"


def format_value(value: Any) -> str:
    """Formats a value for a CSV file.

    Floats are written with `repr`, so that they are read back exactly. None is an empty field.

    Args:
        value (Any): The value to format.

    Returns:
        str: The formatted value.

    Examples:
    ```python
    from cerbernetix.bernstein.files import format_value

    print(format_value(np.float64(0.1)))    # "0.1"
    print(format_value(None))               # ""
    print(format_value(np.int64(3)))        # "3"
    ```
    """
    if value is None:
        return ""

    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))

    if isinstance(value, (int, np.integer)):
        return str(int(value))

    if isinstance(value, (float, np.floating)):
        return repr(float(value))

    return str(value)


def parse_comment(line: str) -> tuple[str, str]:
    """Parses a comment line "# key: value".

    Args:
        line (str): The comment line.

    Returns:
        tuple[str, str]: The key and the value. A line without a colon is a key with no value.
    """
    text = line.strip()[len(COMMENT_PREFIX) :].strip()
    key, _, value = text.partition(":")
    return key.strip(), value.strip()


class CSVFile:
    """Offers a simple API for reading and writing the CSV files of the runs.

    The class binds a filename with a set of properties so that it can be opened in a consistent
    way. When the file is created, the comments are written first, one "# key: value" line each.
    When it is read, the comment lines are skipped and collected in `comments`.

    Attributes:
        filename (str): The path to the file to manage.
        encoding (str): The file encoding.
        comments (dict, readonly): The comments, written on creation, or read from the file.

    Examples:
    ```python
    from cerbernetix.bernstein.files import CSVFile

    file = CSVFile("runs/samples.csv", comments={"seed": 1})

    with file(create=True):
        file.write({"path_id": 0, "n": 1, "position": 0.5, "sigma": 0.25})

    rows = [row for row in file]
    ```
    """

    def __init__(
        self,
        filename: str,
        comments: dict | Iterable[tuple[str, Any]] = None,
        create: bool = False,
        append: bool = False,
        encoding: str = CSV_ENCODING,
        fieldnames: Iterable[str] | bool = None,
    ) -> None:
        """Creates a file manager for CSV files.

        Args:
            filename (str): The path to the file to manage.
            comments (dict | Iterable[tuple[str, Any]], optional): The comments written at the
            head of the file when it is created. Defaults to None.
            create (bool, optional): Opens the file for writing. If it exists, it will be replaced.
            Defaults to False.
            append (bool, optional): Opens the file for adding rows at the end. Defaults to False.
            encoding (str, optional): The file encoding. Defaults to CSV_ENCODING.
            fieldnames (Iterable[str] | bool, optional): The names of the columns. When reading,
            the first row gives them by default, and False reads rows as lists. When writing, the
            keys of the first row give them by default, and rows given as lists are written
            without a header. Defaults to None.
        """
        self.filename = str(filename)
        self.encoding = encoding
        self._comments = {key: format_value(value) for key, value in dict(comments or {}).items()}
        self._fieldnames = fieldnames
        self._file = None
        self._reader = None
        self._writer = None

        if create or append:
            self.open(create=create, append=append)

    @property
    def comments(self) -> dict[str, str]:
        """The comments of the file.

        Returns:
            dict[str, str]: The comments by key, as strings.
        """
        return dict(self._comments)

    def open(self, create: bool = False, append: bool = False) -> CSVFile:
        """Opens the file for access.

        Note: If the file was already opened, it is first closed. The parent folders are created
        when writing, and the comments are written when creating.

        Args:
            create (bool, optional): Opens the file for writing. If it exists, it will be replaced.
            Defaults to False.
            append (bool, optional): Opens the file for adding rows at the end. Defaults to False.

        Raises:
            OSError: If the file cannot be opened.

        Returns:
            CSVFile: Chains the instance.
        """
        self.close()

        if create or append:
            create_file_path(self.filename)
        else:
            self._comments = {}

        # pylint: disable-next=consider-using-with
        self._file = open(
            self.filename,
            mode=get_file_mode(create=create, append=append),
            encoding=self.encoding,
            newline="",
        )

        if create and not append:
            for key, value in list(self._comments.items()):
                self.write_comment(key, value)

        return self

    def close(self) -> CSVFile:
        """Closes the file.

        Note: it does nothing if the file is already closed.

        Returns:
            CSVFile: Chains the instance.
        """
        if self._file is not None:
            self._file.close()

        self._file = None
        self._reader = None
        self._writer = None
        return self

    def read_file(self, iterator: bool = False) -> Iterable[dict | list]:
        """Reads all the rows from the file.

        Note: If the file was already opened, it is first closed, then opened in read mode.

        Args:
            iterator (bool, optional): When True, the function will return an iterator instead of a
            list. Defaults to False.

        Raises:
            OSError: If the file cannot be read.

        Returns:
            Iterable[dict | list]: The rows, with string values.
        """
        if iterator:
            return iter(self)

        return list(self)

    def write_file(
        self, data: Iterable[dict | list], footer: dict | Iterable[tuple[str, Any]] = None
    ) -> int:
        """Writes the comments and all the rows to the file.

        Args:
            data (Iterable[dict | list]): The rows to write.
            footer (dict | Iterable[tuple[str, Any]], optional): The comments written after the
            rows. Defaults to None.

        Raises:
            OSError: If the file cannot be written.

        Returns:
            int: The number of characters written for the rows.
        """
        size = 0
        with self.open(create=True):
            for row in data:
                size += self.write(row)
            for key, value in dict(footer or {}).items():
                self.write_comment(key, value)

        return size

    def _lines(self) -> Iterator[str]:
        for line in self._file:
            if line.startswith(COMMENT_PREFIX):
                key, value = parse_comment(line)
                self._comments[key] = value
            else:
                yield line

    def read(self) -> dict | list:
        """Reads the next row from the file.

        Note: the file must be opened upfront.

        Raises:
            ValueError: If the file is not opened.
            OSError: If the file cannot be read.

        Returns:
            dict | list: The row, or None if the file is at EOF.
        """
        if self._file is None:
            raise ValueError("The file must be opened before reading from it!")

        if self._reader is None:
            if self._fieldnames is False:
                self._reader = csv.reader(self._lines(), dialect=CSV_DIALECT)
            else:
                self._reader = csv.DictReader(
                    self._lines(), fieldnames=self._fieldnames, dialect=CSV_DIALECT
                )

        return next(self._reader, None)

    def write_comment(self, key: str, value: Any = "") -> int:
        """Writes a comment line "# key: value" at the current position.

        Note: the file must be opened upfront. The comment is also kept in `comments`.

        Args:
            key (str): The key of the comment.
            value (Any, optional): The value of the comment. Defaults to "".

        Raises:
            ValueError: If the file is not opened.
            OSError: If the file cannot be written.

        Returns:
            int: The number of characters written.
        """
        if self._file is None:
            raise ValueError("The file must be opened before writing to it!")

        self._comments[key] = format_value(value)
        line = f"{COMMENT_PREFIX} {key}: {self._comments[key]}".rstrip() + CSV_LINE_TERMINATOR
        return self._file.write(line)

    def write(self, data: dict | list) -> int:
        """Writes a row to the file.

        Note: the file must be opened upfront. The header is written before the first row given as
        a dictionary.

        Args:
            data (dict | list): The row to write.

        Raises:
            ValueError: If the file is not opened.
            OSError: If the file cannot be written.

        Returns:
            int: The number of characters written.
        """
        if self._file is None:
            raise ValueError("The file must be opened before writing to it!")

        count = 0
        if self._writer is None:
            options = {"dialect": CSV_DIALECT, "lineterminator": CSV_LINE_TERMINATOR}
            if isinstance(data, dict):
                fieldnames = self._fieldnames or list(data.keys())
                self._writer = csv.DictWriter(self._file, fieldnames=fieldnames, **options)
                count += self._writer.writeheader() or 0
            else:
                self._writer = csv.writer(self._file, **options)

        if isinstance(data, dict):
            row = {key: format_value(value) for key, value in data.items()}
        else:
            row = [format_value(value) for value in data]

        return count + self._writer.writerow(row)

    def __call__(self, create: bool = False, append: bool = False) -> CSVFile:
        """Opens the file for access.

        Args:
            create (bool, optional): Opens the file for writing. Defaults to False.
            append (bool, optional): Opens the file for adding rows at the end. Defaults to False.

        Returns:
            CSVFile: Chains the instance.
        """
        return self.open(create=create, append=append)

    def __enter__(self) -> CSVFile:
        """Opens the context for accessing the file.

        Note: it does nothing if the file is already open.

        Returns:
            CSVFile: Chains the instance.
        """
        if self._file is None:
            self.open()

        return self

    def __exit__(self, exc_type, exc_value, exc_traceback) -> bool:
        """Closes the context for accessing the file.

        Returns:
            bool: False, the exceptions are not silenced.
        """
        self.close()
        return False

    def __iter__(self) -> Iterator[dict | list]:
        """Reads the file row by row.

        Note: If the file was already opened, it is first closed, then opened in read mode.

        Returns:
            Iterator[dict | list]: The instance, as an iterator over the rows.
        """
        return self.open()

    def __next__(self) -> dict | list:
        """Gets the next row from the file.

        Raises:
            StopIteration: Stops the iteration if there is no more rows.

        Returns:
            dict | list: The row.
        """
        row = self.read()
        if row is None:
            self.close()
            raise StopIteration

        return row


def read_csv_file(
    filename: str,
    encoding: str = CSV_ENCODING,
    fieldnames: Iterable[str] | bool = None,
) -> list[dict | list]:
    """Reads the rows of a CSV file, skipping the comments.

    Args:
        filename (str): The path to the file to read.
        encoding (str, optional): The file encoding. Defaults to CSV_ENCODING.
        fieldnames (Iterable[str] | bool, optional): The names of the columns, read from the first
        row by default. False reads the rows as lists. Defaults to None.

    Raises:
        OSError: If the file cannot be read.

    Returns:
        list[dict | list]: The rows, with string values.
    """
    return CSVFile(filename, encoding=encoding, fieldnames=fieldnames).read_file()


def write_csv_file(
    filename: str,
    data: Iterable[dict | list],
    comments: dict | Iterable[tuple[str, Any]] = None,
    encoding: str = CSV_ENCODING,
    fieldnames: Iterable[str] = None,
    footer: dict | Iterable[tuple[str, Any]] = None,
) -> int:
    """Writes rows to a CSV file, between a comment header and an optional comment footer.

    Args:
        filename (str): The path to the file to write.
        data (Iterable[dict | list]): The rows to write.
        comments (dict | Iterable[tuple[str, Any]], optional): The comments written first.
        Defaults to None.
        encoding (str, optional): The file encoding. Defaults to CSV_ENCODING.
        fieldnames (Iterable[str], optional): The names of the columns, taken from the first row by
        default. Defaults to None.
        footer (dict | Iterable[tuple[str, Any]], optional): The comments written after the rows.
        Defaults to None.

    Raises:
        OSError: If the file cannot be written.

    Returns:
        int: The number of characters written for the rows.
    """
    file = CSVFile(filename, comments=comments, encoding=encoding, fieldnames=fieldnames)
    return file.write_file(data, footer)
