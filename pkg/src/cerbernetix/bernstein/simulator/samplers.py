"""Random variates of stable subordinators and of the censoring positions.

The one-sided stable variates use Kanter's representation

    S = sin(αU) / sin(U)^{1/α} · (sin((1-α)U) / W)^{(1-α)/α},

with U uniform on (0, π) and W standard exponential, so that 𝔼 e^{-λS} = e^{-λ^α}.

Examples:
```python
import numpy as np
from cerbernetix.bernstein.simulator import sample_first_passage, sample_stable

rng = np.random.default_rng(1)

print(sample_stable(0.5, 1.0, rng))             # a positive real
print(sample_first_passage(0.5, 1.0, rng, 3))   # 3 first passage times over 1
```
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np

from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.sonine import Provenance, SoninePair, transition_cdf

logger = logging.getLogger(__name__)

# The number of nodes of the inverse distribution function of the undershoot.
UNDERSHOOT_NODES = 512


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"the stable index must lie in (0, 1), got {alpha}")
    return alpha


def _angles(rng: np.random.Generator, size: Any) -> np.ndarray:
    # uniform on (0, π]
    return np.pi * (1.0 - rng.random(size))


def _kanter(alpha: float, angle: np.ndarray, exponential: np.ndarray) -> np.ndarray:
    ratio = np.sin(alpha * angle) / np.sin(angle) ** (1.0 / alpha)
    return ratio * (np.sin((1.0 - alpha) * angle) / exponential) ** ((1.0 - alpha) / alpha)


def _zolotarev(alpha: float, angle: np.ndarray) -> np.ndarray:
    # increasing on (0, π), from α^α (1-α)^{1-α} at 0
    return (
        np.sin(alpha * angle) ** alpha
        * np.sin((1.0 - alpha) * angle) ** (1.0 - alpha)
        / np.sin(angle)
    )


def _shape(values: np.ndarray, size: Any) -> float | np.ndarray:
    if size is None:
        return float(np.reshape(values, -1)[0])
    return np.reshape(values, size)


def sample_stable(
    alpha: float, scale: float, rng: np.random.Generator, size: Any = None
) -> float | np.ndarray:
    """Samples the stable subordinator S_t with 𝔼 e^{-λS_t} = e^{-tλ^α}.

    Args:
        alpha (float): The index α in (0, 1).
        scale (float): The time t > 0; S_t has the law of t^{1/α} S_1.
        rng (np.random.Generator): The random generator.
        size (Any, optional): The shape of the sample, a single value if None. Defaults to None.

    Raises:
        DomainError: If α or t is out of range.

    Returns:
        float | np.ndarray: The variates.
    """
    alpha = _check_alpha(alpha)
    scale = float(scale)
    if not 0.0 < scale < math.inf:
        raise DomainError(f"the time must be positive, got {scale}")

    count = 1 if size is None else size
    values = _kanter(alpha, _angles(rng, count), rng.standard_exponential(count))
    return _shape(scale ** (1.0 / alpha) * values, size)


def sample_size_biased_stable(
    alpha: float, rng: np.random.Generator, size: Any = None
) -> float | np.ndarray:
    """Samples the law s^{-α} p_α(s) ds Γ(1 + α), the stable law biased by s^{-α}.

    Under the bias, the exponential variable of Kanter's representation becomes a Gamma(2 - α)
    variable and the angle gets the density proportional to 1 / B(u), where B is Zolotarev's
    function. The angle is sampled by rejection from the uniform law.

    Args:
        alpha (float): The index α in (0, 1).
        rng (np.random.Generator): The random generator.
        size (Any, optional): The shape of the sample, a single value if None. Defaults to None.

    Raises:
        DomainError: If α is out of range.

    Returns:
        float | np.ndarray: The variates.
    """
    alpha = _check_alpha(alpha)
    count = 1 if size is None else int(np.prod(size))
    bound = alpha**alpha * (1.0 - alpha) ** (1.0 - alpha)

    accepted = []
    missing = count
    while missing > 0:
        proposal = _angles(rng, 2 * missing + 16)
        keep = proposal[rng.random(proposal.size) * _zolotarev(alpha, proposal) <= bound]
        accepted.append(keep[:missing])
        missing -= accepted[-1].size

    angles = np.concatenate(accepted)
    values = _kanter(alpha, angles, rng.gamma(2.0 - alpha, size=count))
    return _shape(values, size)


def sample_first_passage(
    alpha: float, y: float, rng: np.random.Generator, size: Any = None
) -> float | np.ndarray:
    """Samples the first time τ(y) the stable subordinator passes over y, as (y / S₁)^α.

    Args:
        alpha (float): The index α in (0, 1).
        y (float): The level y > 0.
        rng (np.random.Generator): The random generator.
        size (Any, optional): The shape of the sample, a single value if None. Defaults to None.

    Raises:
        DomainError: If α or y is out of range.

    Returns:
        float | np.ndarray: The passage times.
    """
    y = float(y)
    if not 0.0 < y < math.inf:
        raise DomainError(f"the level must be positive, got {y}")
    return (y / sample_stable(alpha, 1.0, rng, size)) ** alpha


@dataclass(frozen=True, eq=False)
class UndershootTable:
    """The inverse distribution function of the position before the first jump across 0.

    Attributes:
        start (float): The starting position y.
        positions (np.ndarray): The nodes of (0, y), clustered at both ends.
        cdf (np.ndarray): The distribution function at the nodes, from 0 to 1.
    """

    start: float
    positions: np.ndarray
    cdf: np.ndarray

    def quantile(self, probabilities: np.ndarray) -> np.ndarray:
        """Inverts the distribution function, strictly inside (0, y).

        Args:
            probabilities (np.ndarray): The probabilities.

        Returns:
            np.ndarray: The positions.
        """
        values = np.interp(probabilities, self.cdf, self.positions)
        lowest = self.start * np.finfo(float).eps
        return np.clip(values, lowest, np.nextafter(self.start, 0.0))


@lru_cache(maxsize=64)
def undershoot_table(pair: SoninePair, y: float) -> UndershootTable:
    """Tabulates the law μ̄(v) k(y - v) dv of the undershoot from y on 512 nodes.

    Args:
        pair (SoninePair): The Sonine pair.
        y (float): The starting position, in (0, T].

    Raises:
        DomainError: If y is out of range.

    Returns:
        UndershootTable: The table.
    """
    y = float(y)
    if not 0.0 < y <= pair.horizon:
        raise DomainError(f"the starting position must lie in (0, {pair.horizon}], got {y}")

    cells = UNDERSHOOT_NODES - 1
    positions = y * (1.0 - np.cos(np.pi * np.arange(UNDERSHOOT_NODES) / cells)) / 2.0
    positions[-1] = y

    cdf = np.maximum.accumulate(np.clip(transition_cdf(pair, y, positions), 0.0, 1.0))
    cdf[0], cdf[-1] = 0.0, 1.0

    logger.debug("Tabulated the undershoot law from %g", y)
    return UndershootTable(y, positions, cdf)


def sample_undershoot(
    pair: SoninePair, y: float, rng: np.random.Generator, size: Any = None
) -> float | np.ndarray:
    """Samples the position before the first jump across 0, with density μ̄(v) k(y - v) on (0, y).

    The law of a stable pair scales with y, so a single table serves every start.

    Args:
        pair (SoninePair): The Sonine pair.
        y (float): The starting position, in (0, T].
        rng (np.random.Generator): The random generator.
        size (Any, optional): The shape of the sample, a single value if None. Defaults to None.

    Raises:
        DomainError: If y is out of range.

    Returns:
        float | np.ndarray: The positions, in (0, y).
    """
    y = float(y)
    if not 0.0 < y <= pair.horizon:
        raise DomainError(f"the starting position must lie in (0, {pair.horizon}], got {y}")

    probabilities = rng.random(1 if size is None else size)
    if pair.spec.is_stable and pair.provenance is Provenance.ANALYTIC:
        fractions = undershoot_fractions(pair, probabilities)
        values = np.clip(y * fractions, y * np.finfo(float).eps, np.nextafter(y, 0.0))
    else:
        values = undershoot_table(pair, y).quantile(probabilities)

    return _shape(values, size)


def undershoot_fractions(pair: SoninePair, probabilities: np.ndarray) -> np.ndarray:
    """Gives the undershoot of a stable pair as a fraction of its start.

    Args:
        pair (SoninePair): The Sonine pair of a stable function.
        probabilities (np.ndarray): The probabilities to invert.

    Returns:
        np.ndarray: The fractions, in (0, 1).
    """
    table = undershoot_table(pair, pair.horizon)
    return table.quantile(probabilities) / table.start
