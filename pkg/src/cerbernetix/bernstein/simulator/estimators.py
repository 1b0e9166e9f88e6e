"""Monte Carlo estimators matched to the identities of the censored process.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.operators import GridFunction, graded_grid
from cerbernetix.bernstein.simulator import estimate_occupation, simulate_chains
from cerbernetix.bernstein.sonine import build_pair

spec = BernsteinSpec(Stable(0.5))
pair = build_pair(spec, 1.0)
samples = simulate_chains(pair, spec, 1.0, 10000, seed=1)

identity = GridFunction.from_function(graded_grid(1.0, 256), lambda x: x)
report = estimate_occupation(pair, samples, identity)
print(report.estimate, report.std_error, report.z)
```
"""
from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import stats

from cerbernetix.bernstein.errors import DomainError, InsufficientDataError
from cerbernetix.bernstein.operators import (
    GridFunction,
    censored_integral,
    default_gamma,
    discrete_inverse,
    graded_grid,
    rl_integral_at,
)
from cerbernetix.bernstein.simulator.chain import ChainSample
from cerbernetix.bernstein.solvers import lifetime_laplace
from cerbernetix.bernstein.sonine import SoninePair, transition_cdf

logger = logging.getLogger(__name__)

# The smallest number of positions a distribution test is run on.
MIN_TEST_SAMPLES = 1000

# The number of cells of the grids the oracles are computed on.
ORACLE_CELLS = 256

# The number of points where the distribution function of the n-th position is tabulated.
ORACLE_POINTS = 128


@dataclass(frozen=True)
class EstimatorReport:
    """A Monte Carlo estimate and its comparison with an analytic value.

    Attributes:
        name (str): The name of the estimated quantity.
        estimate (float): The sample mean.
        std_error (float): The sample standard deviation over √n.
        n_paths (int): The number of paths.
        comparator (float): The analytic value, NaN if none.
        z (float): The score (estimate - comparator) / std_error, NaN if no comparator.
    """

    name: str
    estimate: float
    std_error: float
    n_paths: int
    comparator: float = math.nan
    z: float = math.nan

    @classmethod
    def from_values(
        cls, name: str, values: Iterable[float], comparator: float = None
    ) -> EstimatorReport:
        """Reports the mean of per-path values.

        Args:
            name (str): The name of the estimated quantity.
            values (Iterable[float]): The per-path values.
            comparator (float, optional): The analytic value. Defaults to None.

        Raises:
            DomainError: If fewer than 2 values are given.

        Returns:
            EstimatorReport: The report.
        """
        values = np.asarray(list(values), dtype=float)
        if len(values) < 2:
            raise DomainError(f"an estimate needs at least 2 paths, got {len(values)}")

        estimate = float(np.mean(values))
        std_error = float(np.std(values, ddof=1) / math.sqrt(len(values)))

        if comparator is None:
            return cls(name, estimate, std_error, len(values))

        comparator = float(comparator)
        difference = estimate - comparator
        if std_error > 0.0:
            z = difference / std_error
        else:
            z = 0.0 if difference == 0.0 else math.copysign(math.inf, difference)
        return cls(name, estimate, std_error, len(values), comparator, z)

    @property
    def within(self) -> float:
        """The absolute score |z|."""
        return abs(self.z)

    def as_row(self) -> dict:
        """Gives the summary record of the estimate.

        Returns:
            dict: The name, estimate, standard error, comparator and score.
        """
        row = asdict(self)
        del row["n_paths"]
        return row


def common_start(samples: Sequence[ChainSample]) -> float:
    """Gives the starting position shared by the samples.

    Args:
        samples (Sequence[ChainSample]): The paths.

    Raises:
        DomainError: If no sample is given or the starts differ.

    Returns:
        float: The starting position.
    """
    if not samples:
        raise DomainError("no sample is given")
    starts = {sample.x0 for sample in samples}
    if len(starts) > 1:
        raise DomainError(f"the samples start from {len(starts)} different positions")
    return starts.pop()


def estimate_mean_lifetime(
    samples: Sequence[ChainSample], comparator: float = None, corrected: bool = True
) -> EstimatorReport:
    """Estimates 𝔼ˣ τ∞.

    Args:
        samples (Sequence[ChainSample]): The paths.
        comparator (float, optional): The analytic value. Defaults to None.
        corrected (bool, optional): Adds the expected lifetime left after each stop, when known.
        Defaults to True.

    Raises:
        DomainError: If the samples are invalid.

    Returns:
        EstimatorReport: The estimate.
    """
    common_start(samples)
    values = np.array([sample.tau_inf for sample in samples])
    if corrected:
        corrections = np.array([sample.correction for sample in samples])
        values += np.where(np.isfinite(corrections), corrections, 0.0)
    return EstimatorReport.from_values("mean_lifetime", values, comparator)


def estimate_first_censoring_time(
    samples: Sequence[ChainSample], comparator: float = None
) -> EstimatorReport:
    """Estimates 𝔼ˣ σ₁, the mean first passage time below 0, which is K(x).

    Args:
        samples (Sequence[ChainSample]): The paths.
        comparator (float, optional): The analytic value. Defaults to None.

    Raises:
        DomainError: If the samples are invalid.

    Returns:
        EstimatorReport: The estimate.
    """
    common_start(samples)
    values = [sample.sigmas[0] if len(sample) else 0.0 for sample in samples]
    return EstimatorReport.from_values("first_censoring_time", values, comparator)


def estimate_censoring_time(
    samples: Sequence[ChainSample], n: int, comparator: float = None
) -> EstimatorReport:
    """Estimates 𝔼ˣ σₙ, the mean n-th waiting time, counting 0 for the paths stopped before.

    Args:
        samples (Sequence[ChainSample]): The paths.
        n (int): The index n ≥ 1 of the waiting time.
        comparator (float, optional): The analytic value. Defaults to None.

    Raises:
        DomainError: If the samples or the index are invalid.

    Returns:
        EstimatorReport: The estimate.
    """
    common_start(samples)
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"the index must be a positive integer, got {n}")
    values = [sample.sigmas[n - 1] if len(sample) >= n else 0.0 for sample in samples]
    return EstimatorReport.from_values(f"censoring_time_{n}", values, comparator)


def estimate_occupation(
    pair: SoninePair,
    samples: Sequence[ChainSample],
    g: GridFunction,
    comparator: float = None,
    tol: float = 1e-8,
) -> EstimatorReport:
    """Estimates the censored integral of g at the start by the sum of I g over the positions.

    Each path contributes Σₙ I g(S^c_{τₙ}) from n = 0, where I g(y) is the expected integral of
    g along the first excursion from y. The comparator defaults to the censored integral of g.

    Args:
        pair (SoninePair): The Sonine pair.
        samples (Sequence[ChainSample]): The paths, from a common start.
        g (GridFunction): The integrand, defined at every node of a grid starting at 0.
        comparator (float, optional): The analytic value. Defaults to None.
        tol (float, optional): The tolerance of the default comparator. Defaults to 1e-8.

    Raises:
        DomainError: If the samples start from different positions or an argument is invalid.

    Returns:
        EstimatorReport: The estimate.
    """
    x0 = common_start(samples)
    if x0 > g.grid.horizon:
        raise DomainError(f"the integrand is not defined at the start {x0}")

    points = np.concatenate([np.concatenate(([x0], sample.positions)) for sample in samples])
    offsets = np.cumsum([0] + [len(sample) + 1 for sample in samples[:-1]])
    values = np.add.reduceat(np.asarray(rl_integral_at(pair, g, points)), offsets)

    if comparator is None:
        comparator = censored_integral(pair, g, tol).solution.interpolate(x0)

    report = EstimatorReport.from_values("occupation", values, comparator)
    logger.info("Occupation estimate %g (z = %g)", report.estimate, report.z)
    return report


def estimate_lifetime_lt(
    samples: Sequence[ChainSample],
    lams: Iterable[float],
    pair: SoninePair = None,
    tol: float = 1e-8,
) -> list[EstimatorReport]:
    """Estimates the Laplace transform 𝔼ˣ e^{-λτ∞} of the lifetime.

    The lifetimes are taken up to the stop of each path. When a pair is given, the comparators
    are the certified series values on a graded grid ending at the start.

    Args:
        samples (Sequence[ChainSample]): The paths.
        lams (Iterable[float]): The points λ ≥ 0.
        pair (SoninePair, optional): The Sonine pair of the comparators. Defaults to None.
        tol (float, optional): The tolerance of the comparators. Defaults to 1e-8.

    Raises:
        DomainError: If the samples or a point are invalid.

    Returns:
        list[EstimatorReport]: The estimates, in the order of the points.
    """
    x0 = common_start(samples)
    lifetimes = np.array([sample.tau_inf for sample in samples])
    grid = None if pair is None else graded_grid(x0, ORACLE_CELLS, default_gamma(pair.spec))

    reports = []
    for lam in lams:
        lam = float(lam)
        if not 0.0 <= lam < math.inf:
            raise DomainError(f"the transform is evaluated at λ ≥ 0, got {lam}")

        comparator = None if pair is None else lifetime_laplace(pair, grid, x0, lam, tol)
        values = np.exp(-lam * lifetimes)
        reports.append(EstimatorReport.from_values(f"lifetime_lt_{lam!r}", values, comparator))

    return reports


def kn_cdf_table(pair: SoninePair, x0: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Tabulates the distribution function of the n-th position S^c_{τₙ} started at x0.

    The function v ↦ P^y(S^c_{τ₁} ≤ v) is computed on a graded grid of [0, x0], then carried to
    the n-th position by n - 1 applications of the discrete kernel operator.

    Args:
        pair (SoninePair): The Sonine pair.
        x0 (float): The starting position, in (0, T].
        n (int): The index n ≥ 1.

    Raises:
        DomainError: If an argument is invalid.

    Returns:
        tuple[np.ndarray, np.ndarray]: The points v of [0, x0] and the probabilities.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"the index must be a positive integer, got {n}")
    x0 = float(x0)
    if not 0.0 < x0 <= pair.horizon:
        raise DomainError(f"the starting position must lie in (0, {pair.horizon}], got {x0}")

    points = x0 * (1.0 - np.cos(np.pi * np.arange(ORACLE_POINTS + 1) / ORACLE_POINTS)) / 2.0
    points[-1] = x0
    if n == 1:
        return points, np.asarray(transition_cdf(pair, x0, points), dtype=float)

    grid = graded_grid(x0, ORACLE_CELLS, default_gamma(pair.spec))
    first = np.ones((len(grid), len(points)))
    for row, y in enumerate(grid.nodes[1:], start=1):
        first[row] = transition_cdf(pair, y, np.minimum(points, y))

    operators = discrete_inverse(pair, grid)
    probabilities = np.empty(len(points))
    for column in range(len(points)):
        values = first[:, column]
        for _ in range(int(n) - 1):
            values = operators.kernel(values)
        probabilities[column] = values[-1]

    probabilities = np.maximum.accumulate(np.clip(probabilities, 0.0, 1.0))
    probabilities[0], probabilities[-1] = 0.0, 1.0
    return points, probabilities


def empirical_kn_test(
    samples: Sequence[ChainSample], n: int, pair: SoninePair, x0: float = None
) -> float:
    """Tests the n-th censoring positions against their law by a Kolmogorov-Smirnov test.

    Args:
        samples (Sequence[ChainSample]): The paths.
        n (int): The index n ≥ 1.
        pair (SoninePair): The Sonine pair.
        x0 (float, optional): The starting position, the one of the samples if None.
        Defaults to None.

    Raises:
        DomainError: If the samples start elsewhere or an argument is invalid.
        InsufficientDataError: If fewer than 1000 paths reach the n-th position.

    Returns:
        float: The p-value of the two-sided test.
    """
    start = common_start(samples)
    if x0 is not None and float(x0) != start:
        raise DomainError(f"the samples start from {start}, not {x0}")
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"the index must be a positive integer, got {n}")

    positions = np.array([sample.positions[n - 1] for sample in samples if len(sample) >= n])
    if len(positions) < MIN_TEST_SAMPLES:
        raise InsufficientDataError(
            f"only {len(positions)} paths reach the position {n}, {MIN_TEST_SAMPLES} are needed"
        )

    points, probabilities = kn_cdf_table(pair, start, n)
    result = stats.kstest(positions, lambda v: np.interp(v, points, probabilities))

    logger.info("Position %d: KS statistic %g, p-value %g", n, result.statistic, result.pvalue)
    return float(result.pvalue)
