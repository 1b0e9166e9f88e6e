"""Test the TestCase class with numerical assertions."""
import math
from types import SimpleNamespace

import numpy as np

from cerbernetix.bernstein.testing import TestCase, test_cases

# The tail of the 1/2-stable function, 1 / sqrt(pi x), at x = 1 and x = 4.
STABLE_TAIL = [0.5641895835477563, 0.28209479177387814]


class TestAsserts(TestCase):
    """Test suite for the TestCase class with numerical assertions."""

    @test_cases(
        [
            ["floats", 0.6366197723675814, 0.6366197, 6],
            ["lists", STABLE_TAIL, [0.56418958, 0.28209479], 7],
            ["nested lists", [[0.5, 0.25], [1.0]], [[0.50000001, 0.25], [1.0]], 7],
            ["tuples", (0.5641895, 0.2820947), tuple(STABLE_TAIL), 6],
            ["dicts", {"q": 0.6366197723, "residual": [1e-12]}, {"q": 0.6366197724, "r": [0]}, 7],
            ["list and dict", [0.5, 0.25], {"first": 0.5, "second": 0.25}, 7],
            ["arrays", np.array(STABLE_TAIL), STABLE_TAIL, 7],
            ["numpy scalar", np.float64(0.5), 0.5, 7],
        ]
    )
    def test_lists_almost_equal(self, _, first, second, places):
        """Test nested collections of floats are almost equal."""
        self.assertListsAlmostEqual(first, second, places)
        self.assertRaises(AssertionError, self.assertListsNotAlmostEqual, first, second, places)

    @test_cases(
        [
            ["first is longer", [0.5, 0.25, 0.125], [0.5, 0.25]],
            ["second is longer", [0.5, 0.25], [0.5, 0.25, 0.125]],
            ["mismatch", [0.25, 0.5], [0.5, 0.25]],
            ["list and number", [0.5, 0.25], 0.5],
            ["number and list", 0.5, [0.5, 0.25]],
            ["nested lists", [[0.5, 0.25], [1.0]], [[0.5, 0.25], [1.001]]],
        ]
    )
    def test_lists_not_almost_equal(self, _, first, second):
        """Test nested collections of floats that differ."""
        self.assertListsNotAlmostEqual(first, second)
        self.assertRaises(AssertionError, self.assertListsAlmostEqual, first, second)

    @test_cases(
        [
            ["relative", STABLE_TAIL, [0.5641895835, 0.2820947918], {"rtol": 1e-9}],
            ["absolute", [1e-12, 0.0], [0.0, 1e-12], {"rtol": 0.0, "atol": 1e-11}],
            ["broadcast", np.full((2, 3), 0.5), 0.5, {}],
        ]
    )
    def test_all_close(self, _, first, second, params):
        """Test arrays within tolerance."""
        self.assertAllClose(first, second, **params)

    @test_cases(
        [
            ["relative", STABLE_TAIL, [0.564, 0.282], {"rtol": 1e-6}],
            ["absolute", [1e-12, 0.0], [0.0, 1e-10], {"atol": 1e-11}],
            ["not a number", [0.5, math.nan], [0.5, 0.25], {"rtol": 1.0}],
            ["shape", [0.5], [0.5, 0.5], {}],
        ]
    )
    def test_all_close_fail(self, _, first, second, params):
        """Test arrays out of tolerance."""
        self.assertRaises(AssertionError, self.assertAllClose, first, second, **params)

    def test_all_close_message(self):
        """Test the failure report names the worst value."""
        with self.assertRaises(AssertionError) as context:
            self.assertAllClose([1.0, 2.0, 3.0], [1.0, 2.5, 3.1], rtol=1e-3, msg="K")

        self.assertEqual(
            str(context.exception), "K: 2 values out of tolerance, worst at (1,): 2.0 != 2.5"
        )

    def test_all_close_message_plain_numbers(self):
        """Test the failure report prints plain indices and numbers for numpy inputs."""
        first = np.array([[0.5, 1.0], [2.0, 4.0]])
        second = np.array([[0.5, 1.0], [2.0, 5.0]], dtype=np.float32)

        with self.assertRaises(AssertionError) as context:
            self.assertAllClose(first, second)

        self.assertEqual(
            str(context.exception), "1 values out of tolerance, worst at (1, 1): 4.0 != 5.0"
        )

    @test_cases(
        [
            ["comparator", {"estimate": 3.1, "std_error": 0.01, "comparator": 3.105}, None, 4.0],
            ["expected", {"estimate": 3.1, "std_error": 0.01, "comparator": None}, 3.12, 3.0],
            ["exact", {"estimate": 2.0, "std_error": 0.0, "comparator": 2.0}, None, 4.0],
        ]
    )
    def test_within_errors(self, _, report, expected, errors):
        """Test estimates close to their reference."""
        self.assertWithinErrors(SimpleNamespace(**report), expected, errors)

    @test_cases(
        [
            ["comparator", {"estimate": 3.1, "std_error": 0.001, "comparator": 3.105}, None],
            ["expected", {"estimate": 3.1, "std_error": 0.01, "comparator": 3.1}, 3.2],
            ["not a number", {"estimate": math.nan, "std_error": 0.01, "comparator": 3.1}, None],
        ]
    )
    def test_within_errors_fail(self, _, report, expected):
        """Test estimates far from their reference."""
        self.assertRaises(
            AssertionError, self.assertWithinErrors, SimpleNamespace(**report), expected
        )
