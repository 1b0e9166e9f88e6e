"""Runs many paths in blocks on a thread pool.

The paths are split into blocks of a fixed size. Block b draws from the b-th child of
`SeedSequence(seed)` and the blocks are gathered in their order, so the samples depend on the seed
and the block size only, whatever the number of workers.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from cerbernetix.bernstein.core import BernsteinSpec
from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.simulator.chain import (
    N_MAX,
    T_HORIZON,
    ChainSample,
    simulate_chain_block,
    simulate_path_block,
)
from cerbernetix.bernstein.sonine import SoninePair

logger = logging.getLogger(__name__)

# The number of paths simulated together.
BLOCK_SIZE = 4096

BlockRunner = Callable[[np.random.Generator, int], list[ChainSample]]


def _positive_integer(name: str, value: int) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value}")
    return int(value)


def run_blocks(
    runner: BlockRunner, paths: int, seed: int, workers: int = 1, block_size: int = BLOCK_SIZE
) -> list[ChainSample]:
    """Runs a block simulator over independent random streams.

    Args:
        runner (BlockRunner): Simulates a number of paths with a random generator.
        paths (int): The number of paths.
        seed (int): The master seed, nonnegative.
        workers (int, optional): The number of threads. Defaults to 1.
        block_size (int, optional): The number of paths per block. Defaults to 4096.

    Raises:
        DomainError: If an argument is invalid.

    Returns:
        list[ChainSample]: The paths, indexed by path id.
    """
    paths = _positive_integer("the number of paths", paths)
    workers = _positive_integer("the number of workers", workers)
    block_size = _positive_integer("the block size", block_size)
    if isinstance(seed, bool) or int(seed) != seed or seed < 0:
        raise DomainError(f"the seed must be a nonnegative integer, got {seed}")

    sizes = [block_size] * (paths // block_size)
    if paths % block_size:
        sizes.append(paths % block_size)
    streams = np.random.SeedSequence(int(seed)).spawn(len(sizes))

    def run(index: int) -> list[ChainSample]:
        return runner(np.random.default_rng(streams[index]), sizes[index])

    with ThreadPoolExecutor(max_workers=workers) as executor:
        blocks = list(executor.map(run, range(len(sizes))))

    samples = [sample for block in blocks for sample in block]
    logger.info("Simulated %d paths in %d blocks on %d workers", paths, len(sizes), workers)
    return samples


def simulate_chains(
    pair: SoninePair,
    spec: BernsteinSpec,
    x0: float,
    paths: int,
    seed: int,
    floor: float = None,
    n_max: int = N_MAX,
    workers: int = 1,
    block_size: int = BLOCK_SIZE,
) -> list[ChainSample]:
    """Simulates exact chains of a stable function.

    Args:
        pair (SoninePair): The Sonine pair of the stable function.
        spec (BernsteinSpec): The stable function.
        x0 (float): The starting position, in (0, T].
        paths (int): The number of paths.
        seed (int): The master seed.
        floor (float, optional): The floor δ, 1e-6 x0 if None. Defaults to None.
        n_max (int, optional): The largest number of steps. Defaults to 100000.
        workers (int, optional): The number of threads. Defaults to 1.
        block_size (int, optional): The number of paths per block. Defaults to 4096.

    Raises:
        DomainError: If an argument is invalid.

    Returns:
        list[ChainSample]: The paths, indexed by path id.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable
    from cerbernetix.bernstein.simulator import estimate_mean_lifetime, simulate_chains
    from cerbernetix.bernstein.sonine import build_pair

    spec = BernsteinSpec(Stable(0.5))
    samples = simulate_chains(build_pair(spec, 1.0), spec, 1.0, 10000, seed=1, workers=4)

    print(estimate_mean_lifetime(samples, comparator=3.105230).z)
    ```
    """

    def runner(rng: np.random.Generator, count: int) -> list[ChainSample]:
        return simulate_chain_block(pair, spec, x0, count, rng, floor, n_max)

    return run_blocks(runner, paths, seed, workers, block_size)


def simulate_paths(
    spec: BernsteinSpec,
    x0: float,
    eps: float,
    paths: int,
    seed: int,
    floor: float = None,
    n_max: int = N_MAX,
    t_horizon: float = T_HORIZON,
    workers: int = 1,
    block_size: int = BLOCK_SIZE,
) -> list[ChainSample]:
    """Simulates ε-truncated paths of any Bernstein function with a Lévy tail.

    Args:
        spec (BernsteinSpec): The Bernstein function.
        x0 (float): The starting position.
        eps (float): The smallest jump ε.
        paths (int): The number of paths.
        seed (int): The master seed.
        floor (float, optional): The floor δ, 1e-6 x0 if None. Defaults to None.
        n_max (int, optional): The largest number of censorings. Defaults to 100000.
        t_horizon (float, optional): The longest excursion. Defaults to 1e6.
        workers (int, optional): The number of threads. Defaults to 1.
        block_size (int, optional): The number of paths per block. Defaults to 4096.

    Raises:
        DomainError: If an argument is invalid.

    Returns:
        list[ChainSample]: The paths, indexed by path id.
    """

    def runner(rng: np.random.Generator, count: int) -> list[ChainSample]:
        return simulate_path_block(spec, x0, eps, count, rng, floor, n_max, t_horizon)

    return run_blocks(runner, paths, seed, workers, block_size)
