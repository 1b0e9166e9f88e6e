"""Test the construction of Sonine pairs."""
import math

import numpy as np
from scipy import integrate

from cerbernetix.bernstein.core import (
    BernsteinSpec,
    CustomTriplet,
    Stable,
    StableMixture,
    conjugate,
)
from cerbernetix.bernstein.errors import DomainError, NotAdmissibleError
from cerbernetix.bernstein.sonine import Provenance, build_pair, yosida_tail
from cerbernetix.bernstein.testing import TestCase, test_cases

MIXTURE = BernsteinSpec(StableMixture(((1.0, 0.3), (1.0, 0.7))))


class TestStablePair(TestCase):
    """Test suite for the analytic pairs of stable functions."""

    def test_square_root(self):
        """Tests the pair of the square root."""
        pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
        points = np.array([0.01, 0.5, 1.0])

        self.assertEqual(pair.provenance, Provenance.ANALYTIC)
        self.assertEqual(pair.exponent, 0.5)
        self.assertAllClose(pair.mu_bar(points), 1.0 / np.sqrt(math.pi * points), rtol=1e-14)
        self.assertAllClose(pair.k(points), 1.0 / np.sqrt(math.pi * points), rtol=1e-14)
        self.assertAllClose(pair.K(points), 2.0 * np.sqrt(points / math.pi), rtol=1e-14)
        self.assertAlmostEqual(pair.K(1.0), 1.128379167, places=9)
        self.assertEqual(pair.K(0.0), 0.0)

    @test_cases([["α = 0.3", 0.3], ["α = 0.5", 0.5], ["α = 0.9", 0.9]])
    def test_integrals(self, _, alpha):
        """Tests the closed-form integrals against quadrature."""
        pair = build_pair(BernsteinSpec(Stable(alpha)), 2.0)

        self.assertAlmostEqual(pair.K(1.5), integrate.quad(pair.k, 0.0, 1.5)[0], places=7)
        self.assertAlmostEqual(
            pair.K_integral(1.5), integrate.quad(pair.K, 0.0, 1.5)[0], places=9
        )
        self.assertAlmostEqual(
            pair.mu_bar_integral(1.5), integrate.quad(pair.mu_bar, 0.0, 1.5)[0], places=6
        )

    def test_levy_tail(self):
        """Tests the tail used by the operators."""
        pair = build_pair(BernsteinSpec(Stable(0.5)), 3.0)
        tail = pair.levy_tail

        self.assertIs(tail.mu_bar, pair.mu_bar)
        self.assertIs(tail.mu_bar_integral, pair.mu_bar_integral)
        self.assertEqual(tail.horizon, 3.0)
        self.assertIs(pair.levy_tail, tail)

    def test_monotone(self):
        """Tests μ̄ and k are positive, nonincreasing and convex."""
        pair = build_pair(BernsteinSpec(Stable(0.3)), 1.0)
        points = np.logspace(-4, 0, 40)

        for func in (pair.mu_bar, pair.k):
            values = func(points)
            slopes = np.diff(values) / np.diff(points)
            self.assertTrue(np.all(values > 0.0))
            self.assertTrue(np.all(slopes < 0.0))
            self.assertTrue(np.all(np.diff(slopes) > 0.0))


class TestInvertedPair(TestCase):
    """Test suite for the pairs obtained by Laplace inversion."""

    @classmethod
    def setUpClass(cls):
        cls.pair = build_pair(MIXTURE, 1.0)

    def test_provenance(self):
        """Tests the pair of a mixture is inverted."""
        self.assertEqual(self.pair.provenance, Provenance.INVERTED)
        self.assertEqual(self.pair.exponent, 0.7)

    def test_small_x(self):
        """Tests the kernel behaves like x^{-0.3} / Γ(0.7) near 0."""
        x = 1e-6
        self.assertAlmostEqual(self.pair.k(x) / (x**-0.3 / math.gamma(0.7)), 1.0, delta=0.05)

    def test_kernel_series(self):
        """Tests the kernel against its convergent series Σ (-1)^n x^{0.4n-0.3} / Γ(0.7+0.4n)."""
        points = np.array([0.05, 0.2, 0.5])
        series = sum(
            (-1) ** n * points ** (0.4 * n - 0.3) / math.gamma(0.7 + 0.4 * n) for n in range(80)
        )
        self.assertAllClose(self.pair.k(points), series, rtol=1e-3)

    def test_integrated_kernel(self):
        """Tests K against the quadrature of k."""
        expected = integrate.quad(self.pair.k, 0.0, 0.5, limit=200)[0]
        self.assertAlmostEqual(self.pair.K(0.5), expected, delta=1e-5 * expected)

    def test_monotone(self):
        """Tests the inverted kernel is positive and nonincreasing."""
        points = np.logspace(-4, 0, 30)
        values = self.pair.k(points)
        self.assertTrue(np.all(values > 0.0))
        self.assertTrue(np.all(np.diff(values) < 0.0))

    def test_duality(self):
        """Tests the pair of the conjugate swaps the roles of μ̄ and k."""
        dual = build_pair(conjugate(MIXTURE), 1.0)
        points = np.array([0.01, 0.1, 0.5, 1.0])

        self.assertAllClose(dual.mu_bar(points), self.pair.k(points), rtol=1e-12)
        self.assertAllClose(dual.k(points), self.pair.mu_bar(points), rtol=1e-3)


class TestBuildPair(TestCase):
    """Test suite for the validation of the pairs."""

    @test_cases([["zero", 0.0], ["negative", -1.0], ["infinite", math.inf]])
    def test_horizon(self, _, horizon):
        """Tests the horizon must be a finite positive real."""
        with self.assertRaises(DomainError):
            build_pair(BernsteinSpec(Stable(0.5)), horizon)

    def test_not_admissible(self):
        """Tests a finite Lévy measure is refused."""
        family = CustomTriplet(
            tail=lambda x: np.exp(-np.asarray(x, dtype=float)),
            m0=1.0,
            m1=1.0,
            completely_monotone=True,
            exponent=lambda lam: lam / (1.0 + lam),
        )
        with self.assertRaises(NotAdmissibleError):
            build_pair(BernsteinSpec(family), 1.0)


class TestYosidaTail(TestCase):
    """Test suite for the tails of the Yosida approximants."""

    def test_convergence(self):
        """Tests the tail of f_n approaches the tail of f."""
        spec = BernsteinSpec(Stable(0.5))
        tail = yosida_tail(spec, 1000, 1.0)

        self.assertAlmostEqual(tail.mu_bar(1.0) * math.sqrt(math.pi), 1.0, delta=1e-2)
        self.assertAlmostEqual(tail.mu_bar_integral(1.0) * math.sqrt(math.pi) / 2, 1.0, delta=2e-2)

    def test_bounded(self):
        """Tests the tail of f_n is bounded by n."""
        tail = yosida_tail(BernsteinSpec(Stable(0.5)), 10, 1.0)
        values = tail.mu_bar(np.logspace(-8, 0, 9))
        self.assertTrue(np.all(values <= 10.0 * (1.0 + 1e-6)))
        self.assertTrue(np.all(values > 0.0))
