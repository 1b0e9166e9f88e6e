"""Test the collection of data mappers."""
import math
import unittest

from cerbernetix.bernstein.data import (
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
from cerbernetix.bernstein.testing import test_cases


class TestDataMappers(unittest.TestCase):
    """Test suite for the collection of data mappers."""

    @test_cases([["unset", None], ["path", "runs/stable05.cfg"], ["terms", ((1.0, 0.5),)]])
    def test_passthrough(self, _, value):
        """Test the value is kept as it is."""
        self.assertIs(passthrough(value), value)

    @test_cases(
        [
            ["string", " 64 ", 64],
            ["int", 12, 12],
            ["integral float", 8.0, 8],
        ]
    )
    def test_integer(self, _, value_set, value_get):
        """Test the value is converted to an integer."""
        self.assertEqual(integer(value_set), value_get)

    @test_cases([["fraction", 1.5], ["fraction string", "1.5"], ["bool", True], ["word", "ten"]])
    def test_integer_errors(self, _, value):
        """Test fractional and non numeric values are rejected."""
        self.assertRaises(ValueError, integer, value)

    def test_extended_real(self):
        """Test infinite values are accepted and NaN is not."""
        self.assertEqual(extended_real("inf"), math.inf)
        self.assertEqual(extended_real(" 0.25"), 0.25)
        self.assertEqual(extended_real(3), 3.0)
        self.assertRaises(ValueError, extended_real, "nan")

    @test_cases(
        [
            ["positive", positive(), "1e-8", 1e-8],
            ["positive integer", positive(integer), "8", 8],
            ["nonnegative zero", nonnegative(), "0", 0.0],
            ["bounded", bounded(float, 0.0, 1.0), "1", 1.0],
            ["even", even(), "14", 14],
            ["even bounded", bounded(even(integer), 4, 18), "4", 4],
        ]
    )
    def test_restrictions(self, _, mapper, value_set, value_get):
        """Test the restricted mappers accept valid values."""
        self.assertEqual(mapper(value_set), value_get)

    @test_cases(
        [
            ["positive zero", positive(), "0"],
            ["positive infinite", positive(), "inf"],
            ["nonnegative", nonnegative(), "-1e-300"],
            ["bounded", bounded(float, 0.0, 1.0), "1.5"],
            ["odd", even(), "15"],
            ["even out of range", bounded(even(integer), 4, 18), "20"],
        ]
    )
    def test_restriction_errors(self, _, mapper, value):
        """Test the restricted mappers reject invalid values."""
        self.assertRaises(ValueError, mapper, value)

    def test_stable_terms(self):
        """Test the terms of a stable mixture are parsed."""
        self.assertEqual(stable_terms("1:0.3, 2:0.7"), ((1.0, 0.3), (2.0, 0.7)))
        self.assertEqual(stable_terms([(1, 0.5)]), ((1.0, 0.5),))
        self.assertRaises(ValueError, stable_terms, "1:0.3:2")
        self.assertRaises(ValueError, stable_terms, "0.3")

    @test_cases(
        [
            ["text", "0.5, 1, inf", (0.5, 1.0, math.inf)],
            ["negative", "-2", (-2.0,)],
            ["list", [0.25, 2], (0.25, 2.0)],
            ["number", 2.0, (2.0,)],
        ]
    )
    def test_reals(self, _, value, expected):
        """Test the lists of points are parsed."""
        self.assertEqual(reals(value), expected)

    @test_cases([["empty", ""], ["word", "0.5,half"], ["nan", "1,nan"], ["no items", []]])
    def test_reals_errors(self, _, value):
        """Test malformed lists of points are rejected."""
        self.assertRaises(ValueError, reals, value)
