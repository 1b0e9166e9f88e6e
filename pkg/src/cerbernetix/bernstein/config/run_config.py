"""The parameters of a command line run.

Examples:
```python
from cerbernetix.bernstein.config import RunConfig

config = RunConfig()
config.load_lines(["spec=stable05.cfg", "T=1", "M=1024"], source="run.cfg")

print(config.M)         # 1024
print(config.tol)       # 1e-08
print(config.digest())  # the hash embedded in the outputs

config.set("N", 1)      # ConfigError: unknown option 'N'
```
"""
from __future__ import annotations

import math

from cerbernetix.bernstein.config.config import Config
from cerbernetix.bernstein.config.config_option import ConfigOption
from cerbernetix.bernstein.data import (
    bounded,
    even,
    extended_real,
    integer,
    nonnegative,
    positive,
    reals,
)
from cerbernetix.bernstein.laplace.stehfest import DEFAULT_TERMS, MAX_TERMS, MIN_TERMS
from cerbernetix.bernstein.operators.grid import MIN_CELLS
from cerbernetix.bernstein.simulator.chain import N_MAX, SimulationMode
from cerbernetix.bernstein.simulator.engine import BLOCK_SIZE

# The simulation modes, by name.
MODES = tuple(mode.value for mode in SimulationMode)


def run_options() -> list[ConfigOption]:
    """Creates the options of a run.

    Returns:
        list[ConfigOption]: The options, with their default values.
    """
    return [
        ConfigOption("spec", mapper=str, description="The spec file of the Bernstein function"),
        ConfigOption("T", default=1.0, mapper=positive(), description="The horizon"),
        ConfigOption(
            "M",
            default=256,
            mapper=bounded(integer, MIN_CELLS, math.inf),
            description="The number of grid cells",
        ),
        ConfigOption(
            "gamma",
            mapper=positive(),
            description="The grading exponent, chosen from the spec when not set",
        ),
        ConfigOption("tol", default=1e-8, mapper=positive(), description="The series tolerance"),
        ConfigOption("seed", default=1, mapper=nonnegative(integer), description="The seed"),
        ConfigOption("lam", default=(1.0,), mapper=reals, description="The points λ"),
        ConfigOption("phi0", default=0.0, mapper=extended_real, description="The value φ(0)"),
        ConfigOption("dt", default=0.5, mapper=positive(), description="The time step"),
        ConfigOption("steps", default=10, mapper=nonnegative(integer), description="The steps"),
        ConfigOption("paths", default=10000, mapper=positive(integer), description="The paths"),
        ConfigOption("x0", default=1.0, mapper=positive(), description="The starting position"),
        ConfigOption("eps", default=1e-3, mapper=positive(), description="The jump truncation"),
        ConfigOption(
            "floor",
            mapper=positive(),
            description="The floor δ stopping the paths, 1e-6 x0 when not set",
        ),
        ConfigOption(
            "n_max", default=N_MAX, mapper=positive(integer), description="The step limit"
        ),
        ConfigOption(
            "mode",
            default=SimulationMode.EXACT.value,
            mapper=str,
            choices=MODES,
            description="The simulation mode",
        ),
        ConfigOption("workers", default=1, mapper=positive(integer), description="The threads"),
        ConfigOption(
            "block_size", default=BLOCK_SIZE, mapper=positive(integer), description="The block"
        ),
        ConfigOption(
            "stehfest_terms",
            default=DEFAULT_TERMS,
            mapper=bounded(even(integer), MIN_TERMS, MAX_TERMS),
            description="The number of Gaver-Stehfest terms",
        ),
        ConfigOption("g", mapper=str, description="The CSV file of the right hand side"),
        ConfigOption("out", mapper=str, description="The output CSV file"),
    ]


class RunConfig(Config):
    """The strict configuration of a command line run.

    Examples:
    ```python
    from cerbernetix.bernstein.config import RunConfig

    config = RunConfig({"T": 2.0, "mode": "path"})

    print(config.T, config.mode)    # 2.0 path
    RunConfig({"M": 4})             # ValueError, at least 8 cells
    ```
    """

    def __init__(self, config: dict = None) -> None:
        """Creates the configuration of a run.

        Args:
            config (dict, optional): The initial values. Defaults to None.

        Raises:
            ConfigError: If an option is unknown.
            ValueError: If a value is invalid.
        """
        super().__init__(config, options=run_options(), strict=True)
