"""The commands of the `bernstein` command line.

Each command reads its inputs from a `RunContext` and writes CSV files starting with the comment
header of the run.
"""
from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np

from cerbernetix.bernstein.cli.checks import run_checks
from cerbernetix.bernstein.cli.context import RunContext
from cerbernetix.bernstein.errors import DomainError, InsufficientDataError, NumericsError
from cerbernetix.bernstein.files import write_csv_file, write_grid_function
from cerbernetix.bernstein.operators import SeriesSolution
from cerbernetix.bernstein.simulator import (
    ChainSample,
    SimulationMode,
    StopRule,
    empirical_kn_test,
    estimate_first_censoring_time,
    estimate_lifetime_lt,
    estimate_mean_lifetime,
    estimate_occupation,
    simulate_chains,
    simulate_paths,
)
from cerbernetix.bernstein.solvers import (
    evolve_cauchy,
    lifetime_laplace,
    lifetime_moments,
    solve_ivp,
    solve_resolvent,
)
from cerbernetix.bernstein.sonine import SoninePair, contraction_constant, sonine_residual

logger = logging.getLogger(__name__)

# The number of points of the Sonine residual, log-spaced on [1e-6 T, T].
RESIDUAL_POINTS = 64

# The scores beyond which a comparison is reported.
Z_WARNING = 3.0

Command = Callable[[RunContext], None]


def sonine(context: RunContext) -> None:
    """Tabulates the Sonine pair, with the contraction constant and the residual in the footer."""
    grid = context.grid()
    pair = context.pair()
    nodes = grid.nodes[1:]

    q = contraction_constant(pair)
    points = np.geomspace(1e-6 * grid.horizon, grid.horizon, RESIDUAL_POINTS)
    residual = sonine_residual(pair, points)
    rows = (
        {"x": x, "mu_bar": mu_bar, "k": k, "K": big_k}
        for x, mu_bar, k, big_k in zip(nodes, pair.mu_bar(nodes), pair.k(nodes), pair.K(nodes))
    )
    write_csv_file(
        context.out,
        rows,
        context.comments(provenance=pair.provenance.value),
        fieldnames=("x", "mu_bar", "k", "K"),
        footer={"q": q, "residual": residual},
    )
    logger.info("Sonine pair written to %s: q = %r, residual = %r", context.out, q, residual)


def verify(context: RunContext) -> None:
    """Runs the invariant suite and fails when a check does not hold.

    Raises:
        NumericsError: If a check fails, after the outcomes are written.
    """
    grid = context.grid()
    pair = context.pair()
    results = run_checks(context.spec, pair, grid, context.config.tol, context.config.seed)

    failed = [result.check for result in results if not result.passed]
    write_csv_file(
        context.out,
        (vars(result) for result in results),
        context.comments(),
        fieldnames=("check", "value", "threshold", "passed"),
        footer={"failed": len(failed)},
    )
    if failed:
        raise NumericsError(f"the checks {', '.join(failed)} failed")


def _write_solution(context: RunContext, pair: SoninePair, result: SeriesSolution) -> None:
    q = contraction_constant(pair)
    summary = result.summary()
    write_grid_function(context.out, result.solution, context.comments(q=q, **summary))
    context.write_summary([{"command": context.command, "q": q, **summary}])
    logger.info("Solution written to %s: %s", context.out, summary)


def solve_ivp_command(context: RunContext) -> None:
    """Solves D_c φ = g with φ(0) = φ₀."""
    g = context.rhs()
    pair = context.pair(g.grid.horizon)
    result = solve_ivp(pair, g, context.config.phi0, context.config.tol)
    _write_solution(context, pair, result)


def _single_factor(context: RunContext) -> float:
    lams = context.config.lam
    if len(lams) != 1:
        raise DomainError(f"the resolvent needs a single λ, got {len(lams)}")
    return lams[0]


def resolve(context: RunContext) -> None:
    """Solves D_c φ = λφ + g with φ(0) = φ₀."""
    lam = _single_factor(context)
    g = context.rhs()
    pair = context.pair(g.grid.horizon)
    result = solve_resolvent(pair, lam, g, context.config.phi0, context.config.tol)
    _write_solution(context, pair, result)


def evolve(context: RunContext) -> None:
    """Evolves g by implicit Euler steps of the Cauchy problem, one row per step and node."""
    config = context.config
    g0 = context.rhs()
    pair = context.pair(g0.grid.horizon)
    trajectory = evolve_cauchy(pair, g0, config.dt, config.steps, config.tol)

    rows = (
        {"step": step, "time": step * config.dt, "x": x, "value": value}
        for step, phi in enumerate(trajectory)
        for x, value in zip(phi.nodes, phi.values)
    )
    q = contraction_constant(pair)
    write_csv_file(context.out, rows, context.comments(q=q))

    last = trajectory[-1]
    context.write_summary(
        [
            {
                "command": context.command,
                "steps": config.steps,
                "time": config.steps * config.dt,
                "sup_norm": last.sup_norm(),
                "q": q,
            }
        ]
    )
    logger.info("Trajectory of %d steps written to %s", config.steps, context.out)


def lifetime_lt(context: RunContext) -> None:
    """Tabulates the Laplace transform of the lifetime from x0."""
    config = context.config
    x0 = config.x0
    grid = context.grid(x0)
    pair = context.pair(x0)

    rows = [
        {"lam": lam, "value": lifetime_laplace(pair, grid, x0, lam, config.tol)}
        for lam in config.lam
    ]
    mean = float(lifetime_moments(pair, grid, x0, [1], config.tol)[0])
    q = contraction_constant(pair)

    write_csv_file(context.out, rows, context.comments(q=q), fieldnames=("lam", "value"))
    context.write_summary([{"command": context.command, "x0": x0, "mean_lifetime": mean, "q": q}])
    logger.info("Lifetime transform at %d points written to %s", len(rows), context.out)


def _simulate(context: RunContext, pair: SoninePair) -> list[ChainSample]:
    config = context.config
    if config.mode == SimulationMode.EXACT.value:
        return simulate_chains(
            pair,
            context.spec,
            config.x0,
            config.paths,
            config.seed,
            config.floor,
            config.n_max,
            config.workers,
            config.block_size,
        )
    return simulate_paths(
        context.spec,
        config.x0,
        config.eps,
        config.paths,
        config.seed,
        config.floor,
        config.n_max,
        workers=config.workers,
        block_size=config.block_size,
    )


def _stops(samples: list[ChainSample]) -> dict[str, int]:
    return {
        f"stopped_{rule.value}": sum(1 for sample in samples if sample.stopped_at is rule)
        for rule in StopRule
    }


def simulate(context: RunContext) -> None:
    """Simulates paths, writes their censoring times and positions and the plain estimates."""
    config = context.config
    pair = context.pair(config.x0)
    samples = _simulate(context, pair)

    rows = (
        {"path_id": path_id, "n": n, "position": position, "sigma": sigma}
        for path_id, sample in enumerate(samples)
        for n, (position, sigma) in enumerate(zip(sample.positions, sample.sigmas), start=1)
    )
    stops = _stops(samples)
    write_csv_file(
        context.out,
        rows,
        context.comments(**stops),
        fieldnames=("path_id", "n", "position", "sigma"),
    )

    reports = [
        estimate_mean_lifetime(samples),
        estimate_first_censoring_time(samples),
        *estimate_lifetime_lt(samples, config.lam),
    ]
    context.write_summary((report.as_row() for report in reports), **stops)
    logger.info("%d paths written to %s", len(samples), context.out)


def _mean_lifetime(context: RunContext, pair: SoninePair) -> float:
    x0 = context.config.x0
    if context.spec.is_stable:
        return float(pair.K(x0)) / (1.0 - contraction_constant(pair))
    grid = context.grid(x0)
    return float(lifetime_moments(pair, grid, x0, [1], context.config.tol)[0])


def _kn_test(samples: list[ChainSample], pair: SoninePair) -> float:
    try:
        return empirical_kn_test(samples, 1, pair)
    except InsufficientDataError as error:
        logger.warning("No position test: %s", error)
        return math.nan


def compare(context: RunContext) -> None:
    """Compares the Monte Carlo estimates with the series values, one row per quantity."""
    config = context.config
    g = context.rhs() if config.g else None
    pair = context.pair(max(config.x0, g.grid.horizon) if g else config.x0)
    samples = _simulate(context, pair)

    reports = [
        estimate_mean_lifetime(samples, _mean_lifetime(context, pair)),
        estimate_first_censoring_time(samples, float(pair.K(config.x0))),
        *estimate_lifetime_lt(samples, config.lam, pair, config.tol),
    ]
    if g is not None:
        reports.append(estimate_occupation(pair, samples, g, tol=config.tol))

    for report in reports:
        if report.within > Z_WARNING:
            logger.warning("%s: score %r beyond %r", report.name, report.z, Z_WARNING)

    footer = {
        "ks_pvalue": _kn_test(samples, pair),
        "max_abs_z": max(report.within for report in reports),
        **_stops(samples),
    }
    write_csv_file(
        context.out,
        (report.as_row() for report in reports),
        context.comments(),
        fieldnames=("name", "estimate", "std_error", "comparator", "z"),
        footer=footer,
    )
    logger.info("Comparison of %d quantities written to %s", len(reports), context.out)


# The commands by name, with their help.
COMMANDS: dict[str, tuple[Command, str]] = {
    "sonine": (sonine, "Tabulate the Sonine pair of the spec"),
    "verify": (verify, "Run the invariant suite on the spec"),
    "solve-ivp": (solve_ivp_command, "Solve the censored initial value problem"),
    "resolve": (resolve, "Solve the censored resolvent equation"),
    "evolve": (evolve, "Evolve the censored Cauchy problem"),
    "lifetime-lt": (lifetime_lt, "Tabulate the Laplace transform of the lifetime"),
    "simulate": (simulate, "Simulate the censored decreasing subordinator"),
    "compare": (compare, "Compare the simulation with the series values"),
}
