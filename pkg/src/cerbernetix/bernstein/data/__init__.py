"""A collection of data utilities.

It contains:
- Value mappers:
    - `passthrough(value)` - Keeps a raw value as it is.
    - `integer(value)` - Converts a value to an integer, rejecting fractional numbers.
    - `extended_real(value)` - Converts a value to a float, accepting "inf".
    - `positive(mapper)`, `nonnegative(mapper)` - Restrict a mapper to positive or nonnegative
    values.
    - `bounded(mapper, low, high)` - Restricts a mapper to an interval.
    - `even(mapper)` - Restricts a mapper to even integers.
    - `stable_terms(value)` - Parses the terms "c:alpha,c:alpha" of a stable mixture.
    - `reals(value)` - Parses a list of numbers "x,y,...".

Examples:
```python
from cerbernetix.bernstein.data import bounded, even, integer, positive, stable_terms

print(positive(float)("1e-8"))              # 1e-08
print(bounded(even(integer), 4, 18)("14"))  # 14
print(stable_terms("1:0.3,1:0.7"))          # ((1.0, 0.3), (1.0, 0.7))
```
"""
from cerbernetix.bernstein.data.mappers import (
    ValueMapper,
    bounded,
    even,
    extended_real,
    integer,
    nonnegative,
    passthrough,
    positive,
    reals,
    stable_terms,
)
