"""Test the quadrature of singular integrands."""
import math

import numpy as np

from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.sonine import CumulativeIntegral, singular_integral
from cerbernetix.bernstein.testing import TestCase, test_cases


class TestSingularIntegral(TestCase):
    """Test suite for the graded Gauss rules."""

    @test_cases(
        [
            ["inverse square root", -0.5, 2.0],
            ["strong singularity", -0.9, 10.0],
            ["smooth power", 1.5, 0.4],
        ]
    )
    def test_powers(self, _, power, expected):
        """Tests ∫₀¹ s^p ds = 1 / (p + 1)."""
        value = singular_integral(lambda s: s**power, 1.0, power)
        self.assertAlmostEqual(value, expected, places=10)

    def test_arcsine(self):
        """Tests the half arcsine integral does not depend on x."""
        x = np.array([0.01, 1.0, 7.5])
        values = singular_integral(lambda t: t**-0.5 * (x[:, None] - t) ** -0.5, x / 2, -0.5)
        self.assertAllClose(values, np.full(3, math.pi / 2), rtol=1e-12)

    def test_null_width(self):
        """Tests a null width gives 0."""
        values = singular_integral(lambda s: s**-0.5, [0.0, 4.0], -0.5)
        self.assertAllClose(values, [0.0, 4.0], rtol=1e-12)

    def test_domain(self):
        """Tests the validation of the power and of the widths."""
        with self.assertRaises(DomainError):
            singular_integral(lambda s: 1.0 / s, 1.0, -1.0)
        with self.assertRaises(DomainError):
            singular_integral(lambda s: s, -1.0, 0.0)


class TestCumulativeIntegral(TestCase):
    """Test suite for the tabulated cumulative integrals."""

    def test_singular_integrand(self):
        """Tests the integral of s^{-1/2} + e^{-s}."""
        integral = CumulativeIntegral(lambda s: s**-0.5 + np.exp(-s), 1.0, -0.5, 1.0)
        points = np.array([0.0, 1e-6, 0.3, 1.0, 1.5, 2.0])
        expected = 2.0 * np.sqrt(points) + 1.0 - np.exp(-points)
        self.assertAllClose(integral(points), expected, atol=1e-6)

    def test_scalar(self):
        """Tests a scalar gives a float."""
        integral = CumulativeIntegral(np.ones_like, 0.0, 0.0, 1.0)
        self.assertAlmostEqual(integral(1.25), 1.25, places=12)
        self.assertIsInstance(integral(1.25), float)

    def test_domain(self):
        """Tests the table is only trusted on [0, 2T]."""
        integral = CumulativeIntegral(np.ones_like, 0.0, 0.0, 1.0)
        with self.assertRaises(DomainError):
            integral(2.5)
        with self.assertRaises(DomainError):
            integral(-0.1)
        with self.assertRaises(DomainError):
            CumulativeIntegral(np.ones_like, 1.0, -1.0, 1.0)
