"""A collection of data mappers, used to cast the raw values of configuration files.

Examples:
```python
from cerbernetix.bernstein.data import mappers

print(mappers.positive(float)("1e-8"))          # 1e-08
print(mappers.extended_real("inf"))             # inf
print(mappers.stable_terms("1:0.3, 1:0.7"))     # ((1.0, 0.3), (1.0, 0.7))
```
"""
from __future__ import annotations

import math
from typing import Any, Protocol


class ValueMapper(Protocol):
    """Casts a raw value, as read from a file or a flag, raising a `ValueError` when invalid."""

    def __call__(self, value: Any) -> Any:
        return value  # pragma: no cover


def passthrough(value: Any) -> Any:
    """Keeps a raw value as it is."""
    return value


def integer(value: Any) -> int:
    """Converts a value to an integer, rejecting fractional numbers.

    Args:
        value (Any): The value, an integer or a string holding one.

    Raises:
        ValueError: If the value is not an integer.

    Returns:
        int: The integer.
    """
    if isinstance(value, bool):
        raise ValueError(f"{value!r} is not an integer")
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"{value!r} is not an integer")
        return int(value)
    return int(str(value).strip())


def extended_real(value: Any) -> float:
    """Converts a value to an extended real, accepting "inf".

    Args:
        value (Any): The value.

    Raises:
        ValueError: If the value is not a number.

    Returns:
        float: The number.
    """
    result = float(str(value).strip()) if isinstance(value, str) else float(value)
    if math.isnan(result):
        raise ValueError("NaN is not an extended real")
    return result


def _checked(mapper: ValueMapper, check, description: str) -> ValueMapper:
    def checked(value: Any) -> Any:
        result = mapper(value)
        if not check(result):
            raise ValueError(f"{value!r} is not {description}")
        return result

    return checked


def positive(mapper: ValueMapper = float) -> ValueMapper:
    """Creates a mapper that only accepts positive finite values.

    Args:
        mapper (ValueMapper, optional): The mapper casting the raw value. Defaults to float.

    Returns:
        ValueMapper: The mapper.

    Examples:
    ```python
    from cerbernetix.bernstein.data import integer, positive

    print(positive(integer)("8"))   # 8
    positive(float)("0")            # ValueError
    ```
    """
    return _checked(mapper, lambda value: 0 < value < math.inf, "positive")


def nonnegative(mapper: ValueMapper = float) -> ValueMapper:
    """Creates a mapper that only accepts nonnegative finite values.

    Args:
        mapper (ValueMapper, optional): The mapper casting the raw value. Defaults to float.

    Returns:
        ValueMapper: The mapper.
    """
    return _checked(mapper, lambda value: 0 <= value < math.inf, "nonnegative")


def bounded(mapper: ValueMapper, low: float, high: float) -> ValueMapper:
    """Creates a mapper that only accepts values in [low, high].

    Args:
        mapper (ValueMapper): The mapper casting the raw value.
        low (float): The lowest value.
        high (float): The highest value.

    Returns:
        ValueMapper: The mapper.
    """
    return _checked(mapper, lambda value: low <= value <= high, f"in [{low}, {high}]")


def even(mapper: ValueMapper = integer) -> ValueMapper:
    """Creates a mapper that only accepts even integers.

    Args:
        mapper (ValueMapper, optional): The mapper casting the raw value. Defaults to integer.

    Returns:
        ValueMapper: The mapper.
    """
    return _checked(mapper, lambda value: value % 2 == 0, "even")


def stable_terms(value: Any) -> tuple[tuple[float, float], ...]:
    """Parses the terms c:α of a stable mixture, separated by commas.

    Args:
        value (Any): A string "c:α,c:α,..." or a sequence of pairs.

    Raises:
        ValueError: If a term is malformed.

    Returns:
        tuple[tuple[float, float], ...]: The pairs (c, α).
    """
    if not isinstance(value, str):
        return tuple((float(coef), float(alpha)) for coef, alpha in value)

    terms = []
    for term in value.split(","):
        parts = term.split(":")
        if len(parts) != 2:
            raise ValueError(f"the term {term.strip()!r} is not of the form c:alpha")
        terms.append((float(parts[0]), float(parts[1])))
    return tuple(terms)


def reals(value: Any) -> tuple[float, ...]:
    """Parses a list of extended reals separated by commas.

    Args:
        value (Any): A string "x,y,..." or a sequence of numbers.

    Raises:
        ValueError: If a number is malformed or the list is empty.

    Returns:
        tuple[float, ...]: The numbers.

    Examples:
    ```python
    from cerbernetix.bernstein.data import reals

    print(reals("0.5, 1, inf")) # (0.5, 1.0, inf)
    ```
    """
    items = value.split(",") if isinstance(value, str) else value
    if isinstance(items, (int, float)):
        items = [items]

    numbers = tuple(extended_real(item) for item in items)
    if not numbers:
        raise ValueError("at least one number is expected")
    return numbers
