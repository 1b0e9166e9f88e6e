"""Test the numerical checks of the admissibility assumptions."""
import math

import numpy as np

from cerbernetix.bernstein.core import (
    BernsteinSpec,
    CustomTriplet,
    Stable,
    StableMixture,
    check_assumptions,
    estimate_limit,
)
from cerbernetix.bernstein.testing import TestCase, test_cases

LOW = np.logspace(-8, -4, 9)
HIGH = np.logspace(4, 8, 9)


def exponential_tail(x):
    """The tail of the Lévy measure e^{-t} dt."""
    return np.exp(-np.asarray(x, dtype=float))


class TestEstimateLimit(TestCase):
    """Test suite for the estimation of limits on log grids."""

    @test_cases(
        [
            ["vanishing power at 0", LOW, LOW**0.5, True, 0.0],
            ["exploding power at 0", LOW, LOW**-0.5, True, math.inf],
            ["constant at 0", LOW, np.full(9, 3.0), True, 3.0],
            ["growing power at infinity", HIGH, HIGH**0.3, False, math.inf],
            ["decaying power at infinity", HIGH, HIGH**-0.3, False, 0.0],
            ["constant at infinity", HIGH, np.full(9, 2.5), False, 2.5],
            ["huge constant", HIGH, np.full(9, 1e13), False, math.inf],
        ]
    )
    def test_limits(self, _, points, values, towards_zero, expected):
        """Tests the limits of power functions and constants."""
        self.assertEqual(estimate_limit(points, values, towards_zero), expected)


class TestCheckAssumptions(TestCase):
    """Test suite for the admissibility report."""

    @test_cases(
        [
            ["square root", Stable(0.5)],
            ["mixture", StableMixture(((1.0, 0.3), (1.0, 0.7)))],
            ["small exponent", Stable(0.1)],
        ]
    )
    def test_closed_forms(self, _, family):
        """Tests the closed-form families are admissible."""
        report = check_assumptions(BernsteinSpec(family))

        self.assertTrue(report.a1_pass)
        self.assertTrue(report.a2_pass)
        self.assertTrue(report.admissible)
        self.assertEqual(report.f0_limit, 0.0)
        self.assertEqual(report.f_over_x_at_0, math.inf)
        self.assertEqual(report.f_over_x_at_inf, 0.0)
        self.assertEqual(report.f_at_inf, math.inf)
        self.assertEqual(report.notes, "")

    def test_drift(self):
        """Tests a drift breaks the limit of f(x)/x at infinity."""
        family = CustomTriplet(
            tail=exponential_tail,
            m0=1.0,
            m1=1.0,
            completely_monotone=True,
            exponent=lambda lam: lam / (1.0 + lam),
        )
        report = check_assumptions(BernsteinSpec(family, b=1.0))

        self.assertFalse(report.a1_pass)
        self.assertAlmostEqual(report.f_over_x_at_inf, 1.0, places=3)
        self.assertIn("f(x)/x tends to", report.notes)

    def test_killing_rate(self):
        """Tests a killing rate breaks the limit of f at 0."""
        family = CustomTriplet(tail=exponential_tail, exponent=lambda lam: np.sqrt(lam))
        report = check_assumptions(BernsteinSpec(family, a=0.5))

        self.assertFalse(report.a1_pass)
        self.assertAlmostEqual(report.f0_limit, 0.5, places=3)

    def test_bounded_function(self):
        """Tests a finite Lévy measure is not admissible, but its density may be."""
        family = CustomTriplet(tail=exponential_tail, m0=1.0, m1=1.0, completely_monotone=True)
        report = check_assumptions(BernsteinSpec(family))

        self.assertFalse(report.a1_pass)
        self.assertTrue(report.a2_pass)
        self.assertAlmostEqual(report.f_at_inf, 1.0, places=6)

    def test_unasserted_density(self):
        """Tests a custom density must be asserted to be completely monotone."""
        family = CustomTriplet(
            tail=lambda x: np.asarray(x, dtype=float) ** -0.5 / math.sqrt(math.pi),
            exponent=np.sqrt,
        )
        report = check_assumptions(BernsteinSpec(family))

        self.assertTrue(report.a1_pass)
        self.assertFalse(report.a2_pass)
        self.assertIn("completely monotone", report.notes)

    def test_density_shape(self):
        """Tests the spot check of the shape of an asserted density."""
        family = CustomTriplet(
            tail=exponential_tail,
            density=lambda x: np.sin(np.asarray(x, dtype=float)) + 2.0,
            completely_monotone=True,
            exponent=np.sqrt,
        )
        report = check_assumptions(BernsteinSpec(family))

        self.assertTrue(report.a1_pass)
        self.assertFalse(report.a2_pass)
