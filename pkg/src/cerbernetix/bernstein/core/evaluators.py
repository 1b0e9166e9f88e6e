"""Small helpers shared by every evaluator of the library.

Evaluators accept a scalar or an array and answer with the same shape. Closed-form functions are
sums of power terms, modelled by `PowerSeries`.

Examples:
```python
from cerbernetix.bernstein.core import PowerSeries

# x^{-1/2} / sqrt(pi)
mu_bar = PowerSeries(((0.5641895835477563, -0.5),))

print(mu_bar(4.0))          # 0.28209479177387814
print(mu_bar([1.0, 4.0]))   # [0.56418958 0.28209479]
```
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

# The type of a pure evaluator x -> value, accepting scalars and arrays.
Evaluator = Callable[[Any], Any]


def as_float_array(value: Any) -> tuple[np.ndarray, bool]:
    """Converts a scalar or a sequence to a float array.

    Args:
        value (Any): A scalar, a sequence or an array.

    Returns:
        tuple[np.ndarray, bool]: The float array, and a flag telling if the input was a scalar.
    """
    array = np.asarray(value, dtype=float)
    return array, array.ndim == 0


def restore_shape(array: np.ndarray, scalar: bool) -> float | np.ndarray:
    """Gives back a scalar when the input of an evaluator was a scalar.

    Args:
        array (np.ndarray): The computed values.
        scalar (bool): Whether the input was a scalar.

    Returns:
        float | np.ndarray: A float for scalar inputs, the array otherwise.
    """
    if scalar:
        return float(array)
    return array


@dataclass(frozen=True)
class PowerSeries:
    """A finite sum of power functions x -> sum(coef * x^power).

    Attributes:
        terms (tuple[tuple[float, float], ...]): The pairs (coefficient, power).

    Examples:
    ```python
    from cerbernetix.bernstein.core import PowerSeries

    square_root = PowerSeries(((1.0, 0.5),))
    print(square_root(9.0)) # 3.0
    ```
    """

    terms: tuple[tuple[float, float], ...]

    def __call__(self, x: Any) -> float | np.ndarray:
        """Evaluates the sum at the given points.

        A negative power gives `inf` at 0.

        Args:
            x (Any): The points, nonnegative.

        Returns:
            float | np.ndarray: The values.
        """
        points, scalar = as_float_array(x)
        values = np.zeros_like(points)
        with np.errstate(divide="ignore"):
            for coef, power in self.terms:
                values = values + coef * np.power(points, power)
        return restore_shape(values, scalar)

    def scaled(self, factor: float) -> PowerSeries:
        """Multiplies every coefficient by a factor.

        Args:
            factor (float): The factor.

        Returns:
            PowerSeries: The scaled series.
        """
        return PowerSeries(tuple((coef * factor, power) for coef, power in self.terms))
