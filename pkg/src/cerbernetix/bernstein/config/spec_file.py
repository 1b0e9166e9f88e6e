"""Spec files: the Bernstein function of a run as a flat key-value text block.

A spec file names its family, then the parameters of the family:

```
# the square root
family=stable
alpha=0.5
```

```
family=mixture
terms=1:0.3,1:0.7
```

The keys `a` (killing rate) and `b` (drift) are accepted and checked against the family. Unknown
keys, missing keys and keys foreign to the family are errors.

Examples:
```python
from cerbernetix.bernstein.config import format_spec, parse_spec_lines, read_spec_file

spec = read_spec_file("stable05.cfg")
spec = parse_spec_lines(["family=mixture", "terms=1:0.3,1:0.7"])

print(format_spec(spec))    # ["family=mixture", "terms=1.0:0.3,1.0:0.7"]
```
"""
from __future__ import annotations

from typing import Iterable

from cerbernetix.bernstein.config.config import parse_lines, read_lines
from cerbernetix.bernstein.core import BernsteinSpec, CustomTriplet, Stable, StableMixture
from cerbernetix.bernstein.data import nonnegative, positive, stable_terms
from cerbernetix.bernstein.errors import ConfigError, DomainError

# The keys of each family, with the mappers of their values.
FAMILY_KEYS = {
    "stable": {"alpha": positive()},
    "mixture": {"terms": stable_terms},
}

# The keys shared by all families.
COMMON_KEYS = {"a": nonnegative(), "b": nonnegative()}


def _family(entries: dict, source: str):
    if "family" not in entries:
        raise ConfigError("the key 'family' is missing", source)

    number, name = entries["family"]
    if name not in FAMILY_KEYS:
        choices = ", ".join(FAMILY_KEYS)
        raise ConfigError(f"unknown family '{name}', expected one of {choices}", source, number)

    return name


def parse_spec_lines(lines: Iterable[str], source: str = None) -> BernsteinSpec:
    """Parses a spec block.

    Args:
        lines (Iterable[str]): The lines of the block.
        source (str, optional): The name of the block, reported in errors. Defaults to None.

    Raises:
        ConfigError: If the block is malformed, with the line number of the offending entry.

    Returns:
        BernsteinSpec: The Bernstein function.

    Examples:
    ```python
    from cerbernetix.bernstein.config import parse_spec_lines

    spec = parse_spec_lines(["family=stable", "alpha=0.5"])
    print(spec(4.0))    # 2.0
    ```
    """
    entries = {name: (number, value) for number, name, value in parse_lines(lines, source)}
    family = _family(entries, source)
    keys = {**FAMILY_KEYS[family], **COMMON_KEYS}

    for name, (number, _) in entries.items():
        if name != "family" and name not in keys:
            if any(name in others for others in FAMILY_KEYS.values()):
                message = f"the key '{name}' does not apply to the family '{family}'"
            else:
                message = f"unknown key '{name}'"
            raise ConfigError(message, source, number)

    values = {}
    for name, mapper in keys.items():
        if name not in entries:
            if name in FAMILY_KEYS[family]:
                raise ConfigError(f"the key '{name}' is missing", source, entries["family"][0])
            continue

        number, value = entries[name]
        try:
            values[name] = mapper(value)
        except ValueError as error:
            raise ConfigError(f"invalid value for '{name}': {error}", source, number) from error

    try:
        if family == "stable":
            parameters = Stable(values["alpha"])
        else:
            parameters = StableMixture(values["terms"])
    except DomainError as error:
        number = entries[next(iter(FAMILY_KEYS[family]))][0]
        raise ConfigError(str(error), source, number) from error

    try:
        return BernsteinSpec(parameters, a=values.get("a", 0.0), b=values.get("b", 0.0))
    except DomainError as error:
        number = min(entries[name][0] for name in ("a", "b") if name in entries)
        raise ConfigError(str(error), source, number) from error


def read_spec_file(filename: str) -> BernsteinSpec:
    """Reads a spec file.

    Args:
        filename (str): The path to the file.

    Raises:
        ConfigError: If the file cannot be read or is malformed.

    Returns:
        BernsteinSpec: The Bernstein function.
    """
    return parse_spec_lines(read_lines(filename), str(filename))


def format_spec(spec: BernsteinSpec) -> list[str]:
    """Serializes a spec to the lines of a spec file.

    The killing rate and the drift are written when they are not zero. Parsing the lines gives back
    the same spec.

    Args:
        spec (BernsteinSpec): The Bernstein function.

    Raises:
        DomainError: If the family cannot be serialized, as custom triplets carry functions.

    Returns:
        list[str]: The lines, without line endings.
    """
    family = spec.family
    if isinstance(family, CustomTriplet):
        raise DomainError("a custom triplet cannot be written to a spec file")

    if isinstance(family, Stable):
        lines = ["family=stable", f"alpha={family.alpha!r}"]
    else:
        terms = ",".join(f"{coef!r}:{alpha!r}" for coef, alpha in family.terms)
        lines = ["family=mixture", f"terms={terms}"]

    lines += [f"{name}={getattr(spec, name)!r}" for name in COMMON_KEYS if getattr(spec, name)]
    return lines
