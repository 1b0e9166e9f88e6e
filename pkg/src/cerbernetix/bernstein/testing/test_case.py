"""Extends the default Python TestCase with numerical assertions.

Examples:
```python
from cerbernetix.bernstein import testing

class TestMyStuff(testing.TestCase):
    def test_values(self):
        self.assertListsAlmostEqual(compute(), [1.23, 3.14, 1.61])
        self.assertAllClose(compute_array(), expected, rtol=1e-8)

    def test_estimator(self):
        self.assertWithinErrors(estimate_mean_lifetime(samples), 2.0, errors=4)
```
"""
from __future__ import annotations

import itertools
import unittest
from typing import Any, Iterable

import numpy as np

_MISSING = object()


def _as_iterable(value: Any) -> Iterable | None:
    if isinstance(value, dict):
        return value.values()
    if isinstance(value, np.ndarray):
        return value.ravel().tolist() if value.ndim else None
    if isinstance(value, Iterable) and not isinstance(value, str):
        return value
    return None


class TestCase(unittest.TestCase):
    """Test class with numerical assertions."""

    # pylint: disable-next=invalid-name
    def assertListsAlmostEqual(self, first: Any, second: Any, places: int = 7) -> None:
        """Asserts that 2 nested collections of floats are almost equal by the number of places.

        Dictionaries are compared by their values, in order.

        Args:
            first (Any): The first number or collection.
            second (Any): The second number or collection.
            places (int, optional): The number of decimal places. Defaults to 7.

        Raises:
            AssertionError: If the collections differ in shape or in values.
        """
        left_items = _as_iterable(first)
        right_items = _as_iterable(second)

        if left_items is None and right_items is None:
            self.assertAlmostEqual(first, second, places)
            return

        if left_items is None or right_items is None:
            raise AssertionError("first != second")

        for left, right in itertools.zip_longest(left_items, right_items, fillvalue=_MISSING):
            if left is _MISSING or right is _MISSING:
                raise AssertionError("len(first) != len(second)")
            self.assertListsAlmostEqual(left, right, places)

    # pylint: disable-next=invalid-name
    def assertListsNotAlmostEqual(self, first: Any, second: Any, places: int = 7) -> None:
        """Asserts that 2 nested collections of floats are not almost equal by the number of places.

        Args:
            first (Any): The first number or collection.
            second (Any): The second number or collection.
            places (int, optional): The number of decimal places. Defaults to 7.

        Raises:
            AssertionError: If the collections are almost equal.
        """
        try:
            self.assertListsAlmostEqual(first, second, places)
        except AssertionError:
            return
        raise AssertionError("lists are almost equal")

    # pylint: disable-next=invalid-name
    def assertAllClose(
        self,
        first: Any,
        second: Any,
        rtol: float = 1e-7,
        atol: float = 0.0,
        msg: str = None,
    ) -> None:
        """Asserts that 2 arrays are equal within |first - second| <= atol + rtol |second|.

        Args:
            first (Any): The computed values.
            second (Any): The reference values, broadcast against the first.
            rtol (float, optional): The relative tolerance. Defaults to 1e-7.
            atol (float, optional): The absolute tolerance. Defaults to 0.
            msg (str, optional): A message prepended to the failure report. Defaults to None.

        Raises:
            AssertionError: If a value is out of tolerance.
        """
        actual = np.asarray(first, dtype=float)
        desired = np.asarray(second, dtype=float)
        error = np.abs(actual - desired)
        bound = atol + rtol * np.abs(desired)

        if np.shape(actual) != np.broadcast(actual, desired).shape:
            raise AssertionError(f"shape {actual.shape} does not match {desired.shape}")

        failures = ~(error <= bound)
        if np.any(failures):
            excess = np.where(failures, error - bound, -np.inf)
            worst = tuple(int(i) for i in np.unravel_index(np.argmax(excess), error.shape))
            expected = float(np.broadcast_to(desired, actual.shape)[worst])
            report = (
                f"{np.count_nonzero(failures)} values out of tolerance, worst at {worst}: "
                f"{float(actual[worst])!r} != {expected!r}"
            )
            raise AssertionError(f"{msg}: {report}" if msg else report)

    # pylint: disable-next=invalid-name
    def assertWithinErrors(self, report: Any, expected: float = None, errors: float = 4.0) -> None:
        """Asserts that a Monte Carlo estimate is within some standard errors of a reference.

        Args:
            report (Any): An estimator report with `estimate`, `std_error` and `comparator`.
            expected (float, optional): The reference value. Defaults to the comparator of the
            report.
            errors (float, optional): The number of standard errors allowed. Defaults to 4.

        Raises:
            AssertionError: If the estimate is too far from the reference.
        """
        reference = report.comparator if expected is None else expected
        distance = abs(report.estimate - reference)

        if not distance <= errors * report.std_error:
            raise AssertionError(
                f"estimate {report.estimate!r} is {distance!r} away from {reference!r}, more than "
                f"{errors} standard errors of {report.std_error!r}"
            )
