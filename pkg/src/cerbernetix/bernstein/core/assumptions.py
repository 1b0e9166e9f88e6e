"""Numerical checks of the assumptions needed to build a Sonine pair from a Bernstein function.

The first assumption asks f(0+) = 0, f(x)/x → ∞ at 0, f(x)/x → 0 at ∞ and f(x) → ∞ at ∞. The
limits are estimated on 9-point log grids near both ends of [1e-8, 1e8]. The second assumption asks
a completely monotone density, which holds for the stable families and is asserted by the user for
custom triplets.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable, check_assumptions

report = check_assumptions(BernsteinSpec(Stable(0.5)))
print(report.a1_pass, report.a2_pass) # True True
```
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from cerbernetix.bernstein.core.families import BernsteinSpec
from cerbernetix.bernstein.errors import BernsteinError

# The grids on which the limits at 0 and at ∞ are estimated.
LOW_GRID = np.logspace(-8, -4, 9)
HIGH_GRID = np.logspace(4, 8, 9)

# A value above this threshold counts as infinite.
INFINITY_THRESHOLD = 1e12

# A value below this threshold counts as zero.
ZERO_THRESHOLD = 1e-12

# A log-log slope below this magnitude is read as a finite nonzero limit.
FLAT_SLOPE = 0.01

# The grid used to spot check the shape of a custom density.
SHAPE_GRID = np.logspace(-3, 1, 25)


@dataclass(frozen=True)
class AssumptionReport:
    """The outcome of the assumption checks.

    Attributes:
        f0_limit (float): The estimate of f(0+).
        f_over_x_at_0 (float): The estimate of lim f(x)/x at 0.
        f_over_x_at_inf (float): The estimate of lim f(x)/x at ∞.
        f_at_inf (float): The estimate of lim f(x) at ∞.
        a1_pass (bool): Whether the four limits have the expected values.
        a2_pass (bool): Whether the Lévy measure has a completely monotone density.
        notes (str): The reasons of the failures, empty when everything passes.
    """

    f0_limit: float
    f_over_x_at_0: float
    f_over_x_at_inf: float
    f_at_inf: float
    a1_pass: bool
    a2_pass: bool
    notes: str = ""

    @property
    def admissible(self) -> bool:
        """Tells if both assumptions hold.

        Returns:
            bool: True when a Sonine pair can be built.
        """
        return self.a1_pass and self.a2_pass


def estimate_limit(points: np.ndarray, values: np.ndarray, towards_zero: bool) -> float:
    """Estimates the limit of sampled values at one end of a log grid.

    The log-log slope is fitted over the samples. A slope away from 0 makes the limit 0 or ∞
    depending on its sign and on the direction, otherwise the value at the end of the grid is taken.

    Args:
        points (np.ndarray): The increasing sample points, positive.
        values (np.ndarray): The sampled values.
        towards_zero (bool): Whether the limit is taken at 0 instead of ∞.

    Returns:
        float: The estimated limit, with 0 and `inf` snapped using the thresholds.
    """
    end = float(values[0] if towards_zero else values[-1])

    if np.all(values > 0.0) and np.all(np.isfinite(values)):
        slope = np.polyfit(np.log(points), np.log(values), 1)[0]
        if abs(slope) > FLAT_SLOPE:
            grows = slope < 0.0 if towards_zero else slope > 0.0
            return math.inf if grows else 0.0

    if end > INFINITY_THRESHOLD:
        return math.inf
    if abs(end) < ZERO_THRESHOLD:
        return 0.0
    return end


def _is_decreasing_convex(points: np.ndarray, values: np.ndarray) -> bool:
    if not np.all(np.isfinite(values)):
        return False

    slopes = np.diff(values) / np.diff(points)
    curvature = np.diff(slopes) / np.diff(points)[1:]
    scale = np.max(np.abs(slopes))

    return bool(np.all(slopes <= 0.0) and np.all(curvature >= -1e-6 * scale))


def check_assumptions(spec: BernsteinSpec) -> AssumptionReport:
    """Checks numerically if a Bernstein function is admissible.

    Args:
        spec (BernsteinSpec): The Bernstein function.

    Returns:
        AssumptionReport: The estimated limits and the verdicts. Failures are reported, not raised.

    Examples:
    ```python
    from cerbernetix.bernstein.core import (
        BernsteinSpec,
        CustomTriplet,
        check_assumptions,
    )

    spec = BernsteinSpec(CustomTriplet(tail=lambda x: np.exp(-x), m0=1, m1=1), b=1.0)
    print(check_assumptions(spec).a1_pass) # False
    ```
    """
    notes = []

    try:
        low_values = np.asarray(spec(LOW_GRID), dtype=float)
        high_values = np.asarray(spec(HIGH_GRID), dtype=float)
    except (BernsteinError, ArithmeticError) as error:
        return AssumptionReport(
            f0_limit=math.nan,
            f_over_x_at_0=math.nan,
            f_over_x_at_inf=math.nan,
            f_at_inf=math.nan,
            a1_pass=False,
            a2_pass=False,
            notes=f"f cannot be evaluated: {error}",
        )

    f0_limit = estimate_limit(LOW_GRID, low_values, towards_zero=True)
    f_over_x_at_0 = estimate_limit(LOW_GRID, low_values / LOW_GRID, towards_zero=True)
    f_over_x_at_inf = estimate_limit(HIGH_GRID, high_values / HIGH_GRID, towards_zero=False)
    f_at_inf = estimate_limit(HIGH_GRID, high_values, towards_zero=False)

    if f0_limit != 0.0:
        notes.append(f"f(0+) = {f0_limit:g} instead of 0")
    if f_over_x_at_0 != math.inf:
        notes.append(f"f(x)/x tends to {f_over_x_at_0:g} at 0 instead of infinity")
    if f_over_x_at_inf != 0.0:
        notes.append(f"f(x)/x tends to {f_over_x_at_inf:g} at infinity instead of 0")
    if f_at_inf != math.inf:
        notes.append(f"f tends to {f_at_inf:g} at infinity instead of infinity")

    samples = np.concatenate([low_values, high_values])
    if np.any(np.diff(samples) < 0.0):
        notes.append("f is not nondecreasing on the sampled grid")

    a1_pass = not notes

    if spec.is_closed_form:
        a2_pass = True
    elif not spec.family.completely_monotone:
        a2_pass = False
        notes.append("the density is not asserted to be completely monotone")
    else:
        shape = spec.family.density if spec.family.density is not None else spec.family.tail
        a2_pass = _is_decreasing_convex(SHAPE_GRID, np.asarray(shape(SHAPE_GRID), dtype=float))
        if not a2_pass:
            notes.append("the density is not decreasing and convex on the sampled grid")

    return AssumptionReport(
        f0_limit=f0_limit,
        f_over_x_at_0=f_over_x_at_0,
        f_over_x_at_inf=f_over_x_at_inf,
        f_at_inf=f_at_inf,
        a1_pass=a1_pass,
        a2_pass=a2_pass,
        notes="; ".join(notes),
    )
