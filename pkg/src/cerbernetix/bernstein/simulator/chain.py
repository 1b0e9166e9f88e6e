"""Sample paths of the censored decreasing subordinator.

A path is recorded at the censoring times τ₁ < τ₂ < ...: the n-th entry holds the position
S^c_{τₙ} just before the n-th jump across 0 and the waiting time σₙ = τₙ - τₙ₋₁.

The exact mode applies to stable functions only: from y, the position r before the crossing has
the law μ̄(r) k(y - r) dr and, given r, the waiting time is ((y - r) / S̃)^α where S̃ has the
size-biased stable law. The path mode covers every Bernstein function by discarding the jumps
below ε and replacing them by their mean drift.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from cerbernetix.bernstein.core import BernsteinSpec
from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.simulator.samplers import sample_size_biased_stable, undershoot_fractions
from cerbernetix.bernstein.sonine import SoninePair, contraction_constant

logger = logging.getLogger(__name__)

# The number of steps after which a path is stopped, by default.
N_MAX = 100000

# The default floor, relative to the starting position.
FLOOR_FACTOR = 1e-6

# The default length of an excursion after which a truncated path is stopped.
T_HORIZON = 1e6

# The number of nodes of the inverse distribution function of the large jumps.
JUMP_NODES = 1024


class StopRule(Enum):
    """Why a path stopped."""

    FLOOR = "floor"
    N_MAX = "n_max"
    HORIZON = "horizon"


class SimulationMode(Enum):
    """How a path is simulated."""

    EXACT = "exact"
    PATH = "path"


@dataclass(frozen=True, eq=False)
class ChainSample:
    """The censoring times and positions of a path.

    In path mode, the last entry records where and when the path went below the floor.

    Attributes:
        x0 (float): The starting position.
        positions (np.ndarray): The positions S^c_{τₙ}, each in (0, previous position).
        sigmas (np.ndarray): The waiting times σₙ.
        stopped_at (StopRule): The stop rule that ended the path.
        mode (SimulationMode): The simulation mode.
        correction (float): The expected lifetime left after the last position, K(r) / (1 - q),
        or NaN when unknown. It is never included in `tau_inf`.
    """

    x0: float
    positions: np.ndarray
    sigmas: np.ndarray
    stopped_at: StopRule
    mode: SimulationMode
    correction: float = math.nan

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def tau_inf(self) -> float:
        """The lifetime up to the stop, as the sum of the waiting times.

        Returns:
            float: Σ σₙ.
        """
        return float(np.sum(self.sigmas))


def check_start(x0: float, horizon: float = math.inf) -> float:
    """Validates a starting position.

    Args:
        x0 (float): The starting position.
        horizon (float, optional): The largest position allowed. Defaults to math.inf.

    Raises:
        DomainError: If the position is not in (0, horizon].

    Returns:
        float: The position.
    """
    x0 = float(x0)
    if not 0.0 < x0 <= horizon or math.isinf(x0):
        raise DomainError(f"the starting position must lie in (0, {horizon}], got {x0}")
    return x0


def check_stops(x0: float, floor: float, n_max: int) -> tuple[float, int]:
    """Validates the stop rules of a path, the floor defaulting to 1e-6 x0.

    Args:
        x0 (float): The starting position.
        floor (float): The floor δ in (0, x0), or None.
        n_max (int): The largest number of steps, positive.

    Raises:
        DomainError: If a rule is invalid.

    Returns:
        tuple[float, int]: The floor and the number of steps.
    """
    floor = FLOOR_FACTOR * x0 if floor is None else float(floor)
    if not 0.0 < floor < x0:
        raise DomainError(f"the floor must lie in (0, {x0}), got {floor}")
    if isinstance(n_max, bool) or int(n_max) != n_max or n_max < 1:
        raise DomainError(f"the largest number of steps must be a positive integer, got {n_max}")
    return floor, int(n_max)


def _assemble(
    x0: float,
    count: int,
    records: list[tuple[np.ndarray, np.ndarray, np.ndarray]],
    stops: np.ndarray,
    mode: SimulationMode,
    corrections: np.ndarray,
) -> list[ChainSample]:
    paths = np.concatenate([record[0] for record in records])
    positions = np.concatenate([record[1] for record in records])
    sigmas = np.concatenate([record[2] for record in records])

    # the records are appended step after step, a stable sort keeps them in order per path
    order = np.argsort(paths, kind="stable")
    splits = np.cumsum(np.bincount(paths, minlength=count))[:-1]
    rules = list(StopRule)

    return [
        ChainSample(x0, path_positions, path_sigmas, rules[stop], mode, float(correction))
        for path_positions, path_sigmas, stop, correction in zip(
            np.split(positions[order], splits),
            np.split(sigmas[order], splits),
            stops,
            corrections,
        )
    ]


def _warn_stops(stops: np.ndarray, count: int) -> None:
    rules = list(StopRule)
    for rule in (StopRule.N_MAX, StopRule.HORIZON):
        stopped = int(np.sum(stops == rules.index(rule)))
        if stopped:
            logger.warning("%d of %d paths stopped by the rule %s", stopped, count, rule.value)


def simulate_chain_block(
    pair: SoninePair,
    spec: BernsteinSpec,
    x0: float,
    count: int,
    rng: np.random.Generator,
    floor: float = None,
    n_max: int = N_MAX,
) -> list[ChainSample]:
    """Simulates a block of exact chains, vectorized across the paths.

    Args:
        pair (SoninePair): The Sonine pair of the stable function.
        spec (BernsteinSpec): The stable function.
        x0 (float): The starting position, in (0, T].
        count (int): The number of paths.
        rng (np.random.Generator): The random generator of the block.
        floor (float, optional): The floor δ, 1e-6 x0 if None. Defaults to None.
        n_max (int, optional): The largest number of steps. Defaults to 100000.

    Raises:
        DomainError: If the function is not stable or an argument is invalid.

    Returns:
        list[ChainSample]: The paths, in the order of the block.
    """
    if not spec.is_stable:
        raise DomainError("the exact chain is only available for stable functions")
    x0 = check_start(x0, pair.horizon)
    floor, n_max = check_stops(x0, floor, n_max)
    alpha = spec.alpha_max

    position = np.full(count, x0)
    active = np.arange(count)
    records = []
    step = 0

    while active.size:
        step += 1
        start = position[active]
        undershoot = start * undershoot_fractions(pair, rng.random(active.size))
        biased = sample_size_biased_stable(alpha, rng, active.size)
        sigma = ((start - undershoot) / biased) ** alpha

        records.append((active, undershoot, sigma))
        position[active] = undershoot

        below = undershoot < floor
        active = active[~below] if step < n_max else active[:0]

    rules = list(StopRule)
    stops = np.where(
        position < floor, rules.index(StopRule.FLOOR), rules.index(StopRule.N_MAX)
    )
    _warn_stops(stops, count)
    q = contraction_constant(pair)
    corrections = np.asarray(pair.K(position), dtype=float) / (1.0 - q)
    return _assemble(x0, count, records, stops, SimulationMode.EXACT, corrections)


def simulate_chain(
    pair: SoninePair,
    spec: BernsteinSpec,
    x0: float,
    rng: np.random.Generator,
    floor: float = None,
    n_max: int = N_MAX,
) -> ChainSample:
    """Simulates the embedded chain of a stable function exactly.

    The chain stops at the first position below the floor or after n_max steps. The expected
    lifetime left after the stop, K(r) / (1 - q), is recorded as the correction of the sample.

    Args:
        pair (SoninePair): The Sonine pair of the stable function.
        spec (BernsteinSpec): The stable function.
        x0 (float): The starting position, in (0, T].
        rng (np.random.Generator): The random generator.
        floor (float, optional): The floor δ, 1e-6 x0 if None. Defaults to None.
        n_max (int, optional): The largest number of steps. Defaults to 100000.

    Raises:
        DomainError: If the function is not stable or an argument is invalid.

    Returns:
        ChainSample: The path.

    Examples:
    ```python
    import numpy as np
    from cerbernetix.bernstein.core import BernsteinSpec, Stable
    from cerbernetix.bernstein.simulator import simulate_chain
    from cerbernetix.bernstein.sonine import build_pair

    spec = BernsteinSpec(Stable(0.5))
    sample = simulate_chain(build_pair(spec, 1.0), spec, 1.0, np.random.default_rng(1))

    print(sample.positions[:3])   # decreasing positions in (0, 1)
    print(sample.tau_inf)
    ```
    """
    return simulate_chain_block(pair, spec, x0, 1, rng, floor, n_max)[0]


@dataclass(frozen=True, eq=False)
class JumpTable:
    """The inverse distribution function of the jumps above ε, on a log-log table.

    Attributes:
        sizes (np.ndarray): The jump sizes, from ε to the largest position.
        survival (np.ndarray): The probabilities μ̄(s) / μ̄(ε) at the sizes, decreasing.
    """

    sizes: np.ndarray
    survival: np.ndarray

    @classmethod
    def from_spec(cls, spec: BernsteinSpec, eps: float, top: float) -> JumpTable:
        """Tabulates the jump law of a Bernstein function between ε and a top size.

        Args:
            spec (BernsteinSpec): The Bernstein function.
            eps (float): The smallest jump ε.
            top (float): The largest size of interest.

        Returns:
            JumpTable: The table.
        """
        sizes = np.geomspace(eps, max(top, 2.0 * eps), JUMP_NODES)
        tail = np.asarray(spec.tail(sizes), dtype=float)
        survival = np.minimum.accumulate(tail / tail[0])
        return cls(sizes, survival)

    def sample(self, probabilities: np.ndarray) -> np.ndarray:
        """Maps uniform probabilities to jump sizes, infinite beyond the table.

        Args:
            probabilities (np.ndarray): The probabilities, in (0, 1].

        Returns:
            np.ndarray: The jump sizes.
        """
        inside = probabilities >= self.survival[-1]
        logs = np.interp(
            np.log(np.where(inside, probabilities, 1.0)),
            np.log(self.survival[::-1]),
            np.log(self.sizes[::-1]),
        )
        return np.where(inside, np.exp(logs), math.inf)


def simulate_path_block(
    spec: BernsteinSpec,
    x0: float,
    eps: float,
    count: int,
    rng: np.random.Generator,
    floor: float = None,
    n_max: int = N_MAX,
    t_horizon: float = T_HORIZON,
) -> list[ChainSample]:
    """Simulates a block of ε-truncated paths, vectorized across the paths.

    Args:
        spec (BernsteinSpec): The Bernstein function, with a Lévy tail.
        x0 (float): The starting position.
        eps (float): The smallest jump ε.
        count (int): The number of paths.
        rng (np.random.Generator): The random generator of the block.
        floor (float, optional): The floor δ, 1e-6 x0 if None. Defaults to None.
        n_max (int, optional): The largest number of censorings. Defaults to 100000.
        t_horizon (float, optional): The longest excursion. Defaults to 1e6.

    Raises:
        DomainError: If an argument is invalid.

    Returns:
        list[ChainSample]: The paths, in the order of the block.
    """
    x0 = check_start(x0)
    floor, n_max = check_stops(x0, floor, n_max)
    eps = float(eps)
    if not 0.0 < eps < x0:
        raise DomainError(f"the smallest jump must lie in (0, {x0}), got {eps}")
    t_horizon = float(t_horizon)
    if not t_horizon > 0.0:
        raise DomainError(f"the longest excursion must be positive, got {t_horizon}")

    rate = float(spec.tail(eps))
    drift = float(spec.tail_integral(eps)) - eps * rate + spec.b
    jumps = JumpTable.from_spec(spec, eps, x0)
    rules = list(StopRule)

    position = np.full(count, x0)
    clock = np.zeros(count)
    started = np.zeros(count)
    censorings = np.zeros(count, dtype=int)
    stops = np.zeros(count, dtype=int)
    active = np.arange(count)
    records = []

    while active.size:
        start = position[active]
        wait = rng.standard_exponential(active.size) / rate
        reach = (start - floor) / drift if drift > 0.0 else np.full(active.size, math.inf)
        drifted = reach <= wait

        now = clock[active] + np.where(drifted, reach, wait)
        before = np.where(drifted, floor, start - drift * wait)
        size = jumps.sample(1.0 - rng.random(active.size))

        crossing = ~drifted & (size >= before)
        after = np.where(drifted | crossing, before, before - size)
        below = drifted | (after < floor)

        events = crossing | below
        elapsed = now - started[active]
        records.append((active[events], np.where(below, after, before)[events], elapsed[events]))

        position[active] = after
        clock[active] = now
        started[active[crossing]] = now[crossing]
        censorings[active] += crossing

        long = ~below & (now - started[active] > t_horizon)
        exhausted = ~below & ~long & (censorings[active] >= n_max)
        stops[active[long]] = rules.index(StopRule.HORIZON)
        stops[active[exhausted]] = rules.index(StopRule.N_MAX)
        active = active[~(below | long | exhausted)]

    _warn_stops(stops, count)
    corrections = np.full(count, math.nan)
    return _assemble(x0, count, records, stops, SimulationMode.PATH, corrections)


def simulate_path_truncated(
    spec: BernsteinSpec,
    x0: float,
    eps: float,
    t_horizon: float,
    rng: np.random.Generator,
    floor: float = None,
    n_max: int = N_MAX,
) -> ChainSample:
    """Simulates a path with the jumps below ε replaced by their mean drift.

    Each excursion is a compound Poisson process of jumps above ε, at rate μ̄(ε), plus the drift
    b + ∫₀^ε s μ(ds). A jump across 0 is discarded and starts a new excursion from the position
    before the jump. The path stops when it goes below the floor, or when an excursion lasts
    longer than t_horizon, or after n_max censorings.

    Args:
        spec (BernsteinSpec): The Bernstein function, with a Lévy tail.
        x0 (float): The starting position.
        eps (float): The smallest jump ε.
        t_horizon (float): The longest excursion.
        rng (np.random.Generator): The random generator.
        floor (float, optional): The floor δ, 1e-6 x0 if None. Defaults to None.
        n_max (int, optional): The largest number of censorings. Defaults to 100000.

    Raises:
        DomainError: If an argument is invalid.

    Returns:
        ChainSample: The path.
    """
    return simulate_path_block(spec, x0, eps, 1, rng, floor, n_max, t_horizon)[0]
