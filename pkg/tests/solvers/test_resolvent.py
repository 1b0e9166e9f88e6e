"""Test the resolvent equation of the censored derivative."""
import math

import numpy as np

from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.operators import GridFunction, graded_grid
from cerbernetix.bernstein.solvers import lifetime_laplace, solve_resolvent
from cerbernetix.bernstein.sonine import build_pair
from cerbernetix.bernstein.testing import TestCase, test_cases


class TestSolveResolvent(TestCase):
    """Test suite for the resolvent equation."""

    @classmethod
    def setUpClass(cls):
        cls.pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
        cls.grid = graded_grid(1.0, 128, 2.0)
        cls.zeros = GridFunction.constant(cls.grid, 0.0)

    def test_zero_factor(self):
        """Tests λ = 0 is the initial value problem."""
        result = solve_resolvent(self.pair, 0.0, self.zeros, 1.0, 1e-8)
        self.assertTrue(np.all(result.solution.values == 1.0))

    @test_cases([["λ = -2", -2.0], ["λ = -0.5", -0.5], ["λ = 0.5", 0.5], ["λ = 2", 2.0]])
    def test_residual(self, _, lam):
        """Tests the residual is within 10 tolerances for a random right hand side."""
        rng = np.random.default_rng(11)
        level, wave, frequency = rng.uniform(0.5, 2.0, 3)
        g = GridFunction.from_function(
            self.grid, lambda x: level + wave * np.sin(frequency * math.pi * x)
        )

        result = solve_resolvent(self.pair, lam, g, 0.5, 1e-6)

        self.assertLessEqual(result.residual, 1e-5)
        self.assertLess(result.tail_bound, 1e-6)
        self.assertGreater(result.terms_used, 0)

    def test_linearity(self):
        """Tests the solution is the sum of the homogeneous and inhomogeneous solutions."""
        g = GridFunction.from_function(self.grid, lambda x: 1.0 + x)

        inhomogeneous = solve_resolvent(self.pair, -2.0, g, 0.0, 1e-8).solution.values
        homogeneous = solve_resolvent(self.pair, -2.0, self.zeros, 1.5, 1e-8).solution.values
        full = solve_resolvent(self.pair, -2.0, g, 1.5, 1e-8).solution.values

        self.assertAllClose(inhomogeneous + homogeneous, full, rtol=0.0, atol=1e-10)

    def test_lifetime(self):
        """Tests the homogeneous solution is the Laplace transform of the lifetime."""
        result = solve_resolvent(self.pair, -2.0, self.zeros, 1.0, 1e-8)
        values = result.solution.values

        self.assertEqual(values[0], 1.0)
        self.assertTrue(np.all(values >= -1e-7))
        self.assertTrue(np.all(values <= 1.0 + 1e-7))
        self.assertLess(values[-1], values[self.grid.index(0.25)])
        self.assertAlmostEqual(
            values[-1], lifetime_laplace(self.pair, self.grid, 1.0, 2.0, 1e-8), places=12
        )

    def test_domain(self):
        """Tests the invalid arguments."""
        with self.assertRaises(DomainError):
            solve_resolvent(self.pair, math.inf, self.zeros, 1.0, 1e-8)
        with self.assertRaises(DomainError):
            solve_resolvent(self.pair, -1.0, self.zeros, 1.0, -1.0)
        with self.assertRaises(DomainError):
            missing = GridFunction(self.grid, np.ones(len(self.grid)), defined_from=1)
            solve_resolvent(self.pair, -1.0, missing, 1.0, 1e-8)
