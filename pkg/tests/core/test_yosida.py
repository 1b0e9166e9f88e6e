"""Test the Yosida approximants."""
import numpy as np

from cerbernetix.bernstein.core import BernsteinSpec, CustomTriplet, Stable, yosida_approx
from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.testing import TestCase, test_cases

SPEC = BernsteinSpec(Stable(0.5))


class TestYosidaApprox(TestCase):
    """Test suite for the Yosida approximants."""

    def test_value(self):
        """Tests the first approximant of the square root at 1."""
        self.assertEqual(yosida_approx(SPEC, 1)(1.0), 0.5)

    def test_monotone_convergence(self):
        """Tests the approximants increase to f."""
        values = [yosida_approx(SPEC, n)(1.0) for n in (1, 10, 100, 1000, 10000)]
        self.assertTrue(all(left < right for left, right in zip(values, values[1:])))
        self.assertLess(1.0 - values[-1], 1e-3)

    @test_cases([["n = 1", 1], ["n = 10", 10], ["n = 1000", 1000]])
    def test_bounds(self, _, n):
        """Tests f_n ≤ min(n, f) and |f_n - f| ≤ f²/n."""
        points = np.logspace(-4, 8, 25)
        approximant = yosida_approx(SPEC, n)(points)
        values = SPEC(points)

        self.assertTrue(np.all(approximant <= np.minimum(n, values)))
        self.assertTrue(np.all(values - approximant <= values**2 / n))

    def test_zero(self):
        """Tests a vanishing f gives a vanishing approximant."""
        family = CustomTriplet(tail=np.exp, exponent=lambda lam: np.zeros_like(lam))
        self.assertEqual(yosida_approx(BernsteinSpec(family), 5)(2.0), 0.0)

    @test_cases([["zero", 0], ["negative", -3], ["fraction", 1.5], ["boolean", True]])
    def test_domain(self, _, n):
        """Tests the index must be a positive integer."""
        with self.assertRaises(DomainError):
            yosida_approx(SPEC, n)
