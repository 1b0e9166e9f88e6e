"""The invariant suite run by the `verify` command."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from cerbernetix.bernstein.core import (
    BernsteinSpec,
    check_assumptions,
    classify_spec,
    conjugate,
    conjugate_eval,
    yosida_approx,
)
from cerbernetix.bernstein.operators import (
    ExtensionMode,
    Grid,
    GridFunction,
    censored_derivative,
    censored_integral,
    rl_derivative,
    rl_integral,
)
from cerbernetix.bernstein.solvers import solve_ivp, solve_resolvent
from cerbernetix.bernstein.sonine import (
    Provenance,
    SoninePair,
    contraction_constant,
    sonine_residual,
)

logger = logging.getLogger(__name__)

# The points λ where the Bernstein function is checked.
CHECK_POINTS = np.logspace(-4, 4, 33)

# The indexes of the Yosida approximants.
YOSIDA_INDEXES = (1, 10, 100, 1000)

# The points λ of the resolvent checks.
RESOLVENT_FACTORS = (-2.0, -0.5, 0.5, 2.0)

# The number of points of the Sonine identity, log-spaced on [1e-6 T, T].
SONINE_POINTS = 64

# The bound on the Sonine residual, for analytic and inverted kernels.
SONINE_BOUNDS = {Provenance.ANALYTIC: 1e-8, Provenance.INVERTED: 1e-3}

# The relative bound on the reconstruction errors, measured on [T/10, T].
RECONSTRUCTION_BOUND = 5e-3

# The number of random functions inverted by the left inverse check.
RECONSTRUCTIONS = 20

# The relative bound on the mean lifetimes of the stable functions.
LIFETIME_BOUND = 1e-2


@dataclass(frozen=True)
class CheckResult:
    """The outcome of a check.

    Attributes:
        check (str): The name of the check.
        value (float): The measured value.
        threshold (float): The bound the value is compared with.
        passed (bool): Whether the check holds.
    """

    check: str
    value: float
    threshold: float
    passed: bool

    @classmethod
    def below(cls, check: str, value: float, threshold: float) -> CheckResult:
        """Reports a value expected not to exceed a threshold.

        Args:
            check (str): The name of the check.
            value (float): The measured value.
            threshold (float): The bound.

        Returns:
            CheckResult: The outcome, failed for NaN values.
        """
        value = float(value)
        return cls(check, value, float(threshold), bool(value <= threshold))


def check_assumptions_row(spec: BernsteinSpec) -> list[CheckResult]:
    """Checks the assumptions needed to build a Sonine pair."""
    report = check_assumptions(spec)
    if report.notes:
        logger.warning("Assumptions: %s", report.notes)
    return [
        CheckResult("assumption_a1", float(report.a1_pass), 1.0, report.a1_pass),
        CheckResult("assumption_a2", float(report.a2_pass), 1.0, report.a2_pass),
    ]


def check_shape(spec: BernsteinSpec) -> list[CheckResult]:
    """Checks f is positive, nondecreasing and concave on a log grid."""
    values = np.asarray(spec(CHECK_POINTS), dtype=float)
    slopes = np.diff(values) / np.diff(CHECK_POINTS)
    curvatures = 2.0 * np.diff(slopes) / (CHECK_POINTS[2:] - CHECK_POINTS[:-2])
    return [
        CheckResult("positive", float(np.min(values)), 0.0, bool(np.all(values > 0.0))),
        CheckResult.below("nondecreasing", max(0.0, -float(np.min(np.diff(values)))), 0.0),
        CheckResult.below("concave", max(0.0, float(np.max(curvatures))), 1e-10),
    ]


def check_conjugate(spec: BernsteinSpec) -> list[CheckResult]:
    """Checks the conjugation is an involution and the conjugate rates of the triplet."""
    values = np.asarray(spec(CHECK_POINTS), dtype=float)
    twice = np.asarray(conjugate_eval(conjugate(spec), CHECK_POINTS), dtype=float)
    classification = classify_spec(spec)
    products = max(spec.a * classification.a_star, spec.b * classification.b_star)
    return [
        CheckResult.below("conjugate_involution", np.max(np.abs(twice / values - 1.0)), 1e-12),
        CheckResult.below("conjugate_rates", products, 0.0),
    ]


def check_yosida(spec: BernsteinSpec) -> CheckResult:
    """Checks the Yosida approximants satisfy f - f_n ≤ f²/n."""
    values = np.asarray(spec(CHECK_POINTS), dtype=float)
    ratio = 0.0
    for n in YOSIDA_INDEXES:
        gaps = values - np.asarray(yosida_approx(spec, n)(CHECK_POINTS), dtype=float)
        ratio = max(ratio, float(np.max(gaps * n / values**2)))
    return CheckResult.below("yosida_bound", ratio, 1.0)


def check_pair(pair: SoninePair) -> list[CheckResult]:
    """Checks the Sonine identity and the contraction constant."""
    horizon = pair.horizon
    points = np.geomspace(1e-6 * horizon, horizon, SONINE_POINTS)
    residual = sonine_residual(pair, points)
    q = contraction_constant(pair)

    results = [CheckResult.below("sonine_residual", residual, SONINE_BOUNDS[pair.provenance])]
    if pair.spec.is_stable:
        alpha = pair.spec.family.alpha
        expected = math.sin(math.pi * alpha) / (math.pi * alpha)
        results.append(CheckResult.below("contraction_closed_form", abs(q - expected), 1e-8))
    results.append(CheckResult("contraction", q, 1.0, q < 1.0))
    return results


def _reconstruction_error(
    grid: Grid, exact: np.ndarray, approximation: np.ndarray, scale: float
) -> float:
    first = grid.from_index(grid.horizon / 10.0)
    return float(np.max(np.abs(approximation[first:] - exact[first:]))) / scale


def check_left_inverse(pair: SoninePair, grid: Grid, rng: np.random.Generator) -> CheckResult:
    """Checks the killing derivative inverts the integral on random piecewise smooth functions."""
    horizon = grid.horizon
    error = 0.0
    for _ in range(RECONSTRUCTIONS):
        level, slope, wave, kink, corner = rng.uniform(0.0, 1.0, 5)

        def psi(x, level=level, slope=slope, wave=wave, kink=kink, corner=corner):
            t = x / horizon
            return 1.0 + level + slope * t + wave * np.sin(4.0 * t) + kink * np.abs(t - corner)

        phi = GridFunction.from_function(grid, psi)
        derivative = rl_derivative(pair, rl_integral(pair, phi), ExtensionMode.KILLING)
        scale = float(np.max(np.abs(phi.values)))
        error = max(error, _reconstruction_error(grid, phi.values, derivative.values, scale))

    return CheckResult.below("left_inverse", error, RECONSTRUCTION_BOUND)


def check_ivp(pair: SoninePair, grid: Grid, tol: float) -> list[CheckResult]:
    """Checks the initial value problem gives back the identity and the constants."""
    identity = GridFunction.from_function(grid, lambda x: x)
    values = np.array(censored_derivative(pair, identity).values)
    values[0] = 0.0
    result = solve_ivp(pair, GridFunction(grid, values), 0.0, tol)
    error = _reconstruction_error(grid, grid.nodes, result.solution.values, grid.horizon)

    zeros = GridFunction.constant(grid, 0.0)
    constant = solve_ivp(pair, zeros, 7.0, tol).solution.values
    return [
        CheckResult.below("ivp_identity", error, RECONSTRUCTION_BOUND),
        CheckResult.below("ivp_constant", float(np.max(np.abs(constant - 7.0))), 0.0),
    ]


def check_resolvent(
    pair: SoninePair, grid: Grid, tol: float, rng: np.random.Generator
) -> CheckResult:
    """Checks the residuals of the resolvent equations for a random continuous right hand side."""
    level, wave, start = rng.uniform(-1.0, 1.0, 3)
    g = GridFunction.from_function(
        grid, lambda x: level + wave * np.sin(5.0 * x / grid.horizon)
    )
    residual = max(
        solve_resolvent(pair, lam, g, start, tol).residual for lam in RESOLVENT_FACTORS
    )
    return CheckResult.below("resolvent_residual", residual, 10.0 * tol)


def check_mean_lifetime(pair: SoninePair, grid: Grid, tol: float) -> CheckResult:
    """Checks the censored integral of 1 is K/(1 - q) for a stable function."""
    ones = GridFunction.constant(grid, 1.0)
    solution = censored_integral(pair, ones, tol).solution
    q = contraction_constant(pair)

    error = 0.0
    for fraction in (0.25, 0.5, 1.0):
        x = fraction * grid.horizon
        expected = pair.K(x) / (1.0 - q)
        error = max(error, abs(solution.interpolate(x) - expected) / expected)
    return CheckResult.below("mean_lifetime", error, LIFETIME_BOUND)


def run_checks(
    spec: BernsteinSpec, pair: SoninePair, grid: Grid, tol: float, seed: int = 1
) -> list[CheckResult]:
    """Runs the invariant suite on a Bernstein function.

    Args:
        spec (BernsteinSpec): The Bernstein function.
        pair (SoninePair): Its Sonine pair.
        grid (Grid): The grid of the operator checks, starting at 0.
        tol (float): The tolerance of the series.
        seed (int, optional): The seed of the random functions. Defaults to 1.

    Raises:
        DomainError: If an argument is invalid.
        NumericsError: If a series cannot be certified.

    Returns:
        list[CheckResult]: The outcomes, in the order of the checks.
    """
    rng = np.random.default_rng(seed)
    checks: list[Callable[[], CheckResult | list[CheckResult]]] = [
        lambda: check_assumptions_row(spec),
        lambda: check_shape(spec),
        lambda: check_conjugate(spec),
        lambda: check_yosida(spec),
        lambda: check_pair(pair),
        lambda: check_left_inverse(pair, grid, rng),
        lambda: check_ivp(pair, grid, tol),
        lambda: check_resolvent(pair, grid, tol, rng),
    ]
    if spec.is_stable:
        checks.append(lambda: check_mean_lifetime(pair, grid, tol))

    results = []
    for check in checks:
        outcome = check()
        results.extend(outcome if isinstance(outcome, list) else [outcome])

    for result in results:
        level = logging.INFO if result.passed else logging.WARNING
        logger.log(level, "Check %s: %r (bound %r)", result.check, result.value, result.threshold)
    return results
