"""Monte Carlo simulation of the censored decreasing subordinator.

It contains:
- `sample_stable(alpha, scale, rng, size)`: One-sided stable variates.
- `sample_size_biased_stable(alpha, rng, size)`: Stable variates biased by s^{-α}.
- `sample_first_passage(alpha, y, rng, size)`: The first passage time over y.
- `sample_undershoot(pair, y, rng, size)`: The position before the first jump across 0.
- `UndershootTable`, `undershoot_table(pair, y)`: The tabulated law of the undershoot.
- `ChainSample`, `StopRule`, `SimulationMode`: A simulated path and how it was obtained.
- `simulate_chain(pair, spec, x0, rng, floor, n_max)`: The exact chain of a stable function.
- `simulate_path_truncated(spec, x0, eps, t_horizon, rng, floor, n_max)`: A path without the
jumps below ε.
- `simulate_chains(...)`, `simulate_paths(...)`: Many paths in seeded blocks on a thread pool.
- `EstimatorReport`: An estimate with its standard error and score.
- `estimate_mean_lifetime(samples, comparator, corrected)`: The mean lifetime.
- `estimate_first_censoring_time(samples, comparator)`: The mean first waiting time.
- `estimate_censoring_time(samples, n, comparator)`: The mean n-th waiting time.
- `estimate_occupation(pair, samples, g)`: The censored integral of g at the start.
- `estimate_lifetime_lt(samples, lams, pair)`: The Laplace transform of the lifetime.
- `empirical_kn_test(samples, n, pair, x0)`: The KS test of the n-th positions.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.simulator import estimate_mean_lifetime, simulate_chains
from cerbernetix.bernstein.sonine import build_pair

spec = BernsteinSpec(Stable(0.5))
samples = simulate_chains(build_pair(spec, 1.0), spec, 1.0, paths=10000, seed=1)

report = estimate_mean_lifetime(samples, comparator=3.105230)
print(report.estimate, report.std_error, report.z)
```
"""
from cerbernetix.bernstein.simulator.chain import (
    ChainSample,
    JumpTable,
    SimulationMode,
    StopRule,
    simulate_chain,
    simulate_chain_block,
    simulate_path_block,
    simulate_path_truncated,
)
from cerbernetix.bernstein.simulator.engine import run_blocks, simulate_chains, simulate_paths
from cerbernetix.bernstein.simulator.estimators import (
    EstimatorReport,
    common_start,
    empirical_kn_test,
    estimate_censoring_time,
    estimate_first_censoring_time,
    estimate_lifetime_lt,
    estimate_mean_lifetime,
    estimate_occupation,
    kn_cdf_table,
)
from cerbernetix.bernstein.simulator.samplers import (
    UndershootTable,
    sample_first_passage,
    sample_size_biased_stable,
    sample_stable,
    sample_undershoot,
    undershoot_fractions,
    undershoot_table,
)
