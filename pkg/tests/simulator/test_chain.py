"""Test the paths of the censored decreasing subordinator."""
import math

import numpy as np

from cerbernetix.bernstein.core import BernsteinSpec, Stable, StableMixture
from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.operators import (
    GridFunction,
    censored_integral,
    default_gamma,
    graded_grid,
)
from cerbernetix.bernstein.simulator import (
    SimulationMode,
    StopRule,
    estimate_first_censoring_time,
    estimate_mean_lifetime,
    simulate_chain,
    simulate_path_truncated,
    simulate_paths,
)
from cerbernetix.bernstein.sonine import build_pair
from cerbernetix.bernstein.testing import TestCase, test_cases

# K(1) / (1 - q) = 2√π / (π - 2) for the square root
MEAN_LIFETIME = 2.0 * math.sqrt(math.pi) / (math.pi - 2.0)

# 1 / (1 - q) for the square root
INVERSE_GAP = 1.0 / (1.0 - 2.0 / math.pi)


def potential(x):
    """K(x) for the square root."""
    return 2.0 * math.sqrt(x / math.pi)


class TestSimulateChain(TestCase):
    """Test suite for the exact chain."""

    @classmethod
    def setUpClass(cls):
        cls.spec = BernsteinSpec(Stable(0.5))
        cls.pair = build_pair(cls.spec, 1.0)

    def test_structure(self):
        """Tests the positions decrease inside (0, x0) until the floor."""
        for seed in range(20):
            sample = simulate_chain(self.pair, self.spec, 1.0, np.random.default_rng(seed))

            self.assertEqual(sample.mode, SimulationMode.EXACT)
            self.assertEqual(sample.stopped_at, StopRule.FLOOR)
            self.assertTrue(np.all(sample.positions > 0.0))
            self.assertTrue(np.all(np.diff(np.concatenate(([1.0], sample.positions))) < 0.0))
            self.assertLess(sample.positions[-1], 1e-6)
            self.assertTrue(np.all(sample.positions[:-1] >= 1e-6))
            self.assertTrue(np.all(sample.sigmas >= 0.0))
            self.assertEqual(len(sample.sigmas), len(sample))

    def test_lifetime(self):
        """Tests the lifetime is the sum of the waiting times and the correction is separate."""
        sample = simulate_chain(self.pair, self.spec, 1.0, np.random.default_rng(5))

        self.assertEqual(sample.tau_inf, float(np.sum(sample.sigmas)))
        self.assertAlmostEqual(
            sample.correction, potential(sample.positions[-1]) * INVERSE_GAP, places=6
        )

    def test_floor(self):
        """Tests a custom floor."""
        sample = simulate_chain(self.pair, self.spec, 0.5, np.random.default_rng(7), floor=0.01)

        self.assertLess(sample.positions[-1], 0.01)
        self.assertTrue(np.all(sample.positions[:-1] >= 0.01))
        self.assertEqual(sample.x0, 0.5)

    def test_step_limit(self):
        """Tests the chain stops after n_max steps with a warning."""
        with self.assertLogs("cerbernetix.bernstein.simulator.chain", "WARNING"):
            sample = simulate_chain(
                self.pair, self.spec, 1.0, np.random.default_rng(9), floor=1e-300, n_max=3
            )

        self.assertEqual(len(sample), 3)
        self.assertEqual(sample.stopped_at, StopRule.N_MAX)

    @test_cases(
        [
            ["past the horizon", {"x0": 1.5}],
            ["zero start", {"x0": 0.0}],
            ["floor above the start", {"x0": 0.5, "floor": 0.5}],
            ["no step", {"x0": 1.0, "n_max": 0}],
        ]
    )
    def test_domain_errors(self, _, arguments):
        """Tests the arguments are validated."""
        rng = np.random.default_rng(1)
        self.assertRaises(DomainError, simulate_chain, self.pair, self.spec, rng=rng, **arguments)

    def test_not_stable(self):
        """Tests the exact chain needs a stable function."""
        mixture = BernsteinSpec(StableMixture(((1.0, 0.3), (1.0, 0.7))))
        rng = np.random.default_rng(1)
        self.assertRaises(DomainError, simulate_chain, self.pair, mixture, 1.0, rng)


class TestSimulatePath(TestCase):
    """Test suite for the ε-truncated paths."""

    @classmethod
    def setUpClass(cls):
        cls.spec = BernsteinSpec(Stable(0.5))

    def test_structure(self):
        """Tests the positions decrease inside (0, x0) and the last one is at the floor."""
        for seed in range(10):
            rng = np.random.default_rng(seed)
            sample = simulate_path_truncated(self.spec, 1.0, 1e-3, 1e6, rng)

            self.assertEqual(sample.mode, SimulationMode.PATH)
            self.assertEqual(sample.stopped_at, StopRule.FLOOR)
            self.assertTrue(np.all(sample.positions > 0.0))
            self.assertTrue(np.all(np.diff(np.concatenate(([1.0], sample.positions))) < 0.0))
            self.assertLessEqual(sample.positions[-1], 1e-6)
            self.assertTrue(np.all(sample.sigmas >= 0.0))
            self.assertTrue(math.isnan(sample.correction))

    def test_mean_lifetime(self):
        """Tests the mean lifetime is within 5% of the exact one for ε = 1e-4."""
        samples = simulate_paths(self.spec, 1.0, 1e-4, 2000, seed=3)
        report = estimate_mean_lifetime(samples)

        self.assertLess(abs(report.estimate - MEAN_LIFETIME), 0.05 * MEAN_LIFETIME)

    def test_mixture_mean_lifetime(self):
        """Tests the mean lifetime of a mixture against the censored integral of 1."""
        mixture = BernsteinSpec(StableMixture(((1.0, 0.3), (1.0, 0.7))))
        pair = build_pair(mixture, 1.0)
        ones = GridFunction.constant(graded_grid(1.0, 512, default_gamma(mixture)), 1.0)
        series = censored_integral(pair, ones, 1e-8).solution.values[-1]

        samples = simulate_paths(mixture, 1.0, 1e-4, 20000, seed=2024)
        report = estimate_mean_lifetime(samples, series)

        self.assertEqual(report.n_paths, 20000)
        self.assertWithinErrors(report, errors=3.0)

    def test_first_passage(self):
        """Tests the mean first censoring time approaches K(1)."""
        samples = simulate_paths(self.spec, 1.0, 1e-3, 4000, seed=5)
        report = estimate_first_censoring_time(samples)

        self.assertLess(abs(report.estimate - potential(1.0)), 0.02 + 4.0 * report.std_error)

    def test_excursion_limit(self):
        """Tests the paths stop with a warning when an excursion is too long."""
        with self.assertLogs("cerbernetix.bernstein.simulator.chain", "WARNING"):
            samples = simulate_paths(self.spec, 1.0, 1e-3, 50, seed=1, t_horizon=1e-6)

        self.assertTrue(all(sample.stopped_at is StopRule.HORIZON for sample in samples))

    @test_cases(
        [
            ["ε too large", 1.0, 1.0],
            ["no ε", 1.0, 0.0],
            ["no start", 0.0, 1e-3],
        ]
    )
    def test_domain_errors(self, _, x0, eps):
        """Tests the arguments are validated."""
        rng = np.random.default_rng(1)
        self.assertRaises(DomainError, simulate_path_truncated, self.spec, x0, eps, 1e6, rng)
