"""A set of named run parameters, read from flat "key=value" blocks.

Examples:
```python
from cerbernetix.bernstein.config import Config, ConfigOption
from cerbernetix.bernstein.data import integer, positive

config = Config(options=[ConfigOption("T", 1.0, positive()), ConfigOption("M", 256, integer)])
config.load_lines(["# grid", "T=2", "M=1024"], source="run.cfg")

print(config.T, config["M"])    # 2.0 1024
print(config.digest())          # the hash embedded in the outputs
```
"""
from __future__ import annotations

import hashlib
from typing import Any, Iterable, Iterator

from cerbernetix.bernstein.config.config_option import ConfigOption
from cerbernetix.bernstein.errors import ConfigError

# The character introducing a comment line in configuration files.
COMMENT = "#"


def parse_lines(lines: Iterable[str], source: str = None) -> Iterator[tuple[int, str, str]]:
    """Parses a flat "key=value" text block.

    Blank lines and lines starting with "#" are skipped. Keys and values are stripped.

    Args:
        lines (Iterable[str]): The lines of the block.
        source (str, optional): The name of the block, reported in errors. Defaults to None.

    Raises:
        ConfigError: If a line is not a "key=value" entry, or a key is repeated.

    Yields:
        Iterator[tuple[int, str, str]]: The 1-based line number, the key and the raw value.

    Examples:
    ```python
    from cerbernetix.bernstein.config import parse_lines

    for number, key, value in parse_lines(["# square root", "family=stable", "alpha = 0.5"]):
        print(number, key, value)   # 2 family stable, then 3 alpha 0.5
    ```
    """
    seen = set()
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith(COMMENT):
            continue

        name, separator, value = line.partition("=")
        name = name.strip()
        if not separator or not name:
            raise ConfigError(f"expected 'key=value', got '{line}'", source, number)

        if name in seen:
            raise ConfigError(f"the option '{name}' is repeated", source, number)
        seen.add(name)

        yield number, name, value.strip()


def read_lines(filename: str) -> list[str]:
    """Reads the lines of a configuration file.

    Args:
        filename (str): The path to the file.

    Raises:
        ConfigError: If the file cannot be read.

    Returns:
        list[str]: The lines, without their line endings.
    """
    try:
        with open(filename, "r", encoding="utf-8") as file:
            return file.read().splitlines()
    except OSError as error:
        raise ConfigError(f"cannot read the file: {error.strerror}", str(filename)) from error


class Config:
    """A set of named run parameters.

    A strict configuration only knows the options it was created with. A loose one creates an
    option on the first value given to an unknown name.

    The options are also read as attributes or items: `config.T` and `config["T"]`.

    Attributes:
        strict (bool, readonly): Tells if unknown names are rejected.
    """

    def __init__(
        self,
        values: dict = None,
        options: Iterable[ConfigOption] = None,
        strict: bool = False,
    ) -> None:
        """Creates a configuration.

        Args:
            values (dict, optional): The raw values, by name. Defaults to None.
            options (Iterable[ConfigOption], optional): The known options, copied.
            Defaults to None.
            strict (bool, optional): Rejects unknown names. Defaults to False.

        Raises:
            ConfigError: If the configuration is strict and a value has no option.
            ValueError: If a value is rejected by its option.
        """
        self._strict = bool(strict)
        self._options = {option.name: option.copy() for option in options or ()}
        self.update(values or {})

    @property
    def strict(self) -> bool:
        """Tells if unknown names are rejected."""
        return self._strict

    def keys(self) -> Iterable[str]:
        """Gives the names of the options, in definition order.

        Returns:
            Iterable[str]: The names.
        """
        return self._options.keys()

    def option(self, name: str) -> ConfigOption | None:
        """Gives an option.

        Args:
            name (str): The name of the option.

        Returns:
            ConfigOption | None: The option, None if unknown.
        """
        return self._options.get(name)

    def _known(self, name: str) -> ConfigOption:
        if name not in self._options:
            if self._strict:
                raise ConfigError(f"unknown option '{name}'")
            self._options[name] = ConfigOption(name)
        return self._options[name]

    def get(self, name: str, default: Any = None) -> Any:
        """Gives the effective value of an option.

        Args:
            name (str): The name of the option.
            default (Any, optional): The value of an unknown option. Defaults to None.

        Returns:
            Any: The value.
        """
        option = self._options.get(name)
        return default if option is None else option.get()

    def set(self, name: str, raw: Any) -> Any:
        """Sets an option from a raw value.

        Args:
            name (str): The name of the option.
            raw (Any): The raw value, None or an empty text to unset the option.

        Raises:
            ConfigError: If the configuration is strict and the name is unknown.
            ValueError: If the option rejects the value.

        Returns:
            Any: The effective value.
        """
        return self._known(name).set(raw)

    def reset(self, name: str) -> None:
        """Unsets an option, back to its default value.

        Args:
            name (str): The name of the option.

        Raises:
            ConfigError: If the configuration is strict and the name is unknown.
        """
        self._known(name).reset()

    def update(self, values: dict) -> None:
        """Sets several options from raw values.

        Args:
            values (dict): The raw values, by name.

        Raises:
            ConfigError: If the configuration is strict and a name is unknown.
            ValueError: If an option rejects its value.
        """
        for name, raw in values.items():
            self.set(name, raw)

    def as_dict(self) -> dict:
        """Gives the effective values, by name in definition order.

        Returns:
            dict: The values.
        """
        return {name: option.get() for name, option in self._options.items()}

    def canonical_lines(self) -> list[str]:
        """Lists the options as "name=value" lines sorted by name.

        The lines load back to the same effective values.

        Returns:
            list[str]: The lines.
        """
        return [str(self._options[name]) for name in sorted(self._options)]

    def digest(self) -> str:
        """Computes the SHA-256 hash of the canonical lines.

        Returns:
            str: The hexadecimal digest, the same for the same effective values.
        """
        text = "".join(f"{line}\n" for line in self.canonical_lines())
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def load_lines(self, lines: Iterable[str], source: str = None) -> list[str]:
        """Loads a flat "key=value" block.

        Args:
            lines (Iterable[str]): The lines of the block.
            source (str, optional): The name of the block, reported in errors. Defaults to None.

        Raises:
            ConfigError: If a line is malformed, a key is repeated or unknown to a strict
            configuration, or a value is rejected. The error carries the 1-based line number.

        Returns:
            list[str]: The names read from the block, in order.
        """
        loaded = []
        for number, name, raw in parse_lines(lines, source):
            try:
                self.set(name, raw)
            except ValueError as error:
                raise ConfigError(str(error), source, number) from error
            loaded.append(name)
        return loaded

    def load_file(self, filename: str) -> list[str]:
        """Loads a flat "key=value" file.

        Args:
            filename (str): The path to the file.

        Raises:
            ConfigError: If the file cannot be read or is malformed.

        Returns:
            list[str]: The names read from the file, in order.
        """
        return self.load_lines(read_lines(filename), str(filename))

    def __getattr__(self, name: str) -> Any:
        options = self.__dict__.get("_options", {})
        if name in options:
            return options[name].get()
        raise AttributeError(f"'{type(self).__name__}' object has no attribute '{name}'")

    def __getitem__(self, name: str) -> Any:
        if name not in self._options:
            raise KeyError(name)
        return self._options[name].get()

    def __setitem__(self, name: str, raw: Any) -> None:
        self.set(name, raw)

    def __contains__(self, name: object) -> bool:
        return name in self._options

    def __iter__(self) -> Iterator[str]:
        return iter(self._options)

    def __len__(self) -> int:
        return len(self._options)

    def __str__(self) -> str:
        return "\n".join(str(option) for option in self._options.values())
