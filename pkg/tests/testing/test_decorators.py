"""Test the decorators for parametric tests."""
import math
import unittest
from typing import Callable
from unittest.mock import Mock, patch

from cerbernetix.bernstein.testing import test_cases


class TestParameters(unittest.TestCase):
    """Test suite for the decorators for parametric tests."""

    def test_test_case_decorator(self):
        """Test each case runs in a sub-test titled by the case."""
        decorator = test_cases([{"title": "stable", "alpha": 0.5}])
        self.assertIsInstance(decorator, Callable)

        mock_test = Mock()
        wrapper = decorator(mock_test)

        with patch.object(self, "subTest") as sub_test_mock:
            wrapper(self)

            mock_test.assert_called_once_with(self, title="stable", alpha=0.5)
            sub_test_mock.assert_called_once_with("stable")

    def test_test_case_decorator_failure(self):
        """Test the decorator rejects missing cases."""
        with patch.object(self, "subTest") as sub_test_mock:
            self.assertRaises(ValueError, test_cases, "stable")
            self.assertRaises(ValueError, test_cases, [])
            self.assertRaises(ValueError, test_cases, ())

            sub_test_mock.assert_not_called()

    @test_cases(
        [
            ["title", [], {"title": "stable"}, "stable"],
            ["message", [], {"message": "stable"}, "stable"],
            ["_", [], {"_": "stable"}, "stable"],
            ["default", [], {"alpha": 0.5}, "case 0"],
            ["first", ["stable", 0.5], {}, "stable"],
            ["none", [None], {}, "case 0"],
        ]
    )
    def test_test_case_title(self, _, args, kwargs, title):
        """Test the title of a case."""
        with patch.object(self, "subTest") as sub_test_mock:
            mock_test = Mock()
            test_cases([args or kwargs])(mock_test)(self)

            mock_test.assert_called_once_with(self, *args, **kwargs)
            sub_test_mock.assert_called_once_with(title)

    def test_test_case_order(self):
        """Test the cases run in order, numbered from 0."""
        mock_test = Mock()
        wrapper = test_cases([{"alpha": 0.25}, {"alpha": 0.75}])(mock_test)

        with patch.object(self, "subTest") as sub_test_mock:
            wrapper(self)

            self.assertEqual(
                [call.args[0] for call in sub_test_mock.call_args_list], ["case 0", "case 1"]
            )
            self.assertEqual(
                [call.kwargs["alpha"] for call in mock_test.call_args_list], [0.25, 0.75]
            )

    @test_cases(
        [
            {"_": "named params", "lam": 4.0, "expected": 2.0},
            ["positioned params", 4.0, 2.0],
        ]
    )
    def test_test_case_params(self, _, lam, expected):
        """Test the parameters reach the test method."""
        self.assertEqual(math.sqrt(lam), expected)

    @test_cases([0.5])
    def test_test_case_single_params(self, alpha):
        """Test a case given as a single value."""
        self.assertEqual(alpha, 0.5)
