"""A named run parameter, with its default value and the mapper casting its raw values.

Examples:
```python
from cerbernetix.bernstein.config import ConfigOption
from cerbernetix.bernstein.data import positive, reals

tol = ConfigOption("tol", 1e-8, mapper=positive())
lam = ConfigOption("lam", (1.0,), mapper=reals)
mode = ConfigOption("mode", "exact", choices=("exact", "path"))

tol.set("1e-10")
lam.set("0.5, 2")

print(tol, lam, mode)   # tol=1e-10 lam=0.5,2.0 mode=exact
mode.set("euler")       # ValueError
```
"""
from __future__ import annotations

import copy
from typing import Any, Iterable

from cerbernetix.bernstein.data import ValueMapper, passthrough


def format_option_value(value: Any) -> str:
    """Gives the text of a value, as written in a configuration file.

    The text reads back to the same value through the mapper of the option: sequences are
    comma-separated and a missing value is empty.

    Args:
        value (Any): The value of an option.

    Returns:
        str: The text of the value.

    Examples:
    ```python
    from cerbernetix.bernstein.config import format_option_value

    format_option_value((0.5, 2.0))     # "0.5,2.0"
    format_option_value(None)           # ""
    ```
    """
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return ",".join(format_option_value(item) for item in value)
    return str(value)


class ConfigOption:
    """A named run parameter.

    The default value stands while no value is set. Raw values, as read from a file or given on the
    command line, go through the mapper, which raises a `ValueError` on invalid ones. An empty text
    unsets the option.

    Attributes:
        name (str, readonly): The name of the option.
        default (Any, readonly): The value of the option while it is not set.
        mapper (ValueMapper, readonly): Casts the raw values.
        choices (tuple, readonly): The accepted values, any value when empty.
        description (str, readonly): The help of the option.
        value (Any, readonly): The value set, None when unset.
    """

    def __init__(
        self,
        name: str,
        default: Any = None,
        mapper: ValueMapper = None,
        choices: Iterable = None,
        description: str = "",
    ) -> None:
        """Creates a run parameter.

        Args:
            name (str): The name of the option.
            default (Any, optional): The value while it is not set, cast by the mapper.
            Defaults to None.
            mapper (ValueMapper, optional): Casts the raw values. Defaults to None, keeping them.
            choices (Iterable, optional): The accepted values. Defaults to None.
            description (str, optional): The help of the option. Defaults to "".

        Raises:
            ValueError: If the name is empty, the mapper is not callable, or the default value is
            missing or is not a choice while choices are given.
        """
        if not name:
            raise ValueError("an option needs a name")

        mapper = passthrough if mapper is None else mapper
        if not callable(mapper):
            raise ValueError(f"the mapper of '{name}' is not callable")

        self._name = str(name)
        self._mapper = mapper
        self._choices = tuple(choices or ())
        self._description = description or ""
        self._value = None
        self._default = self.cast(default)

        if self._choices and self._default is None:
            raise ValueError(f"the option '{name}' needs a default choice")

    @property
    def name(self) -> str:
        """The name of the option."""
        return self._name

    @property
    def default(self) -> Any:
        """The value of the option while it is not set."""
        return self._default

    @property
    def mapper(self) -> ValueMapper:
        """Casts the raw values."""
        return self._mapper

    @property
    def choices(self) -> tuple:
        """The accepted values, any value when empty."""
        return self._choices

    @property
    def description(self) -> str:
        """The help of the option."""
        return self._description

    @property
    def value(self) -> Any:
        """The value set, None when unset."""
        return self._value

    def cast(self, raw: Any) -> Any:
        """Casts a raw value and checks it is a choice.

        Args:
            raw (Any): The raw value. None or an empty text give None.

        Raises:
            ValueError: If the mapper rejects the value or it is not a choice.

        Returns:
            Any: The value.
        """
        if raw is None or (isinstance(raw, str) and not raw.strip()):
            return None

        try:
            value = self._mapper(raw)
        except (TypeError, ArithmeticError) as error:
            raise ValueError(f"invalid value {raw!r} for '{self._name}': {error}") from error

        if self._choices and value not in self._choices:
            raise ValueError(
                f"invalid value {raw!r} for '{self._name}', expected one of "
                + ", ".join(map(str, self._choices))
            )
        return value

    def get(self) -> Any:
        """Gives the value of the option, the default one while it is not set.

        Returns:
            Any: The effective value.
        """
        return self._default if self._value is None else self._value

    def set(self, raw: Any) -> Any:
        """Sets the value of the option.

        Args:
            raw (Any): The raw value, None or an empty text to unset the option.

        Raises:
            ValueError: If the mapper rejects the value or it is not a choice.

        Returns:
            Any: The effective value.
        """
        self._value = self.cast(raw)
        return self.get()

    def reset(self) -> None:
        """Unsets the option, back to its default value."""
        self._value = None

    def copy(self) -> ConfigOption:
        """Gives an independent copy of the option, with its value.

        Returns:
            ConfigOption: The copy.
        """
        return copy.copy(self)

    def __str__(self) -> str:
        """Gives the "name=value" line of the option, with the effective value.

        Returns:
            str: The line, which reads back to the same value.
        """
        return f"{self._name}={format_option_value(self.get())}"

    def __eq__(self, other: object) -> bool:
        """Tells if two options have the same name and the same effective value.

        Args:
            other (object): The other option.

        Returns:
            bool: True if both options match.
        """
        if not isinstance(other, ConfigOption):
            return NotImplemented
        return self._name == other._name and self.get() == other.get()

