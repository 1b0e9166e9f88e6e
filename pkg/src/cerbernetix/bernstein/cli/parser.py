"""The arguments of the `bernstein` command line.

The values of a run come from the defaults of `RunConfig`, then from the `--config` file, then from
the flags. The flags are given as text and cast by the options, like the lines of a config file.
"""
from __future__ import annotations

import argparse
from typing import Iterable

from cerbernetix.bernstein.cli.commands import COMMANDS
from cerbernetix.bernstein.config import MODES, RunConfig
from cerbernetix.bernstein.errors import ConfigError

# The source named in the errors raised by the flags.
FLAGS_SOURCE = "command line"

# The flags shared by every command, with the option they set and their help.
COMMON_FLAGS = (
    ("--spec", "spec", "the spec file of the Bernstein function"),
    ("--T", "T", "the horizon T"),
    ("--M", "M", "the number of grid cells, at least 8"),
    ("--gamma", "gamma", "the grading exponent of the grid"),
    ("--tol", "tol", "the tolerance of the series"),
    ("--stehfest-terms", "stehfest_terms", "the number of Gaver-Stehfest terms"),
    ("--out", "out", "the output CSV file, <command>.csv by default"),
)

# The flags of the equations.
EQUATION_FLAGS = (
    ("--g", "g", "the CSV file of the right hand side (x,value), 1 by default"),
    ("--phi0", "phi0", "the initial value φ(0)"),
)

# The flags of the points λ, a comma separated list; write --lam=-2 for negative values.
LAM_FLAGS = (("--lam", "lam", "the points λ, comma separated"),)

# The flags of the Cauchy problem.
EVOLUTION_FLAGS = (
    ("--dt", "dt", "the time step"),
    ("--steps", "steps", "the number of steps"),
)

# The flags of the simulation.
SIMULATION_FLAGS = (
    ("--x0", "x0", "the starting position"),
    ("--paths", "paths", "the number of paths"),
    ("--seed", "seed", "the seed of the random streams"),
    ("--mode", "mode", f"the simulation mode, one of {', '.join(MODES)}"),
    ("--eps", "eps", "the smallest simulated jump in path mode"),
    ("--floor", "floor", "the floor δ stopping the paths, 1e-6 x0 by default"),
    ("--n-max", "n_max", "the largest number of steps of a path"),
    ("--workers", "workers", "the number of threads"),
    ("--block-size", "block_size", "the number of paths per block"),
)

# The flags of each command, beyond the common ones.
COMMAND_FLAGS = {
    "sonine": (),
    "verify": (("--seed", "seed", "the seed of the random functions"),),
    "solve-ivp": EQUATION_FLAGS,
    "resolve": EQUATION_FLAGS + LAM_FLAGS,
    "evolve": (EQUATION_FLAGS[0],) + EVOLUTION_FLAGS,
    "lifetime-lt": LAM_FLAGS + (SIMULATION_FLAGS[0],),
    "simulate": SIMULATION_FLAGS + LAM_FLAGS,
    "compare": SIMULATION_FLAGS + LAM_FLAGS + (EQUATION_FLAGS[0],),
}


def _add_flags(parser: argparse.ArgumentParser, flags: Iterable[tuple[str, str, str]]) -> None:
    for flag, dest, description in flags:
        parser.add_argument(flag, dest=dest, metavar=dest.upper(), help=description)


def build_parser() -> argparse.ArgumentParser:
    """Builds the parser of the command line.

    Returns:
        argparse.ArgumentParser: The parser, with one sub-parser per command.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="a run config file of key=value lines")
    common.add_argument("--log", help="write the log to this file instead of stderr")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log more")
    common.add_argument("-q", "--quiet", action="count", default=0, help="log less")
    _add_flags(common, COMMON_FLAGS)

    parser = argparse.ArgumentParser(
        prog="bernstein",
        description="Fractional calculus driven by Bernstein functions, with CSV outputs.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for name, (_, description) in COMMANDS.items():
        command = commands.add_parser(name, parents=[common], help=description)
        _add_flags(command, COMMAND_FLAGS[name])

    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Builds the configuration of a run from the parsed arguments.

    Args:
        args (argparse.Namespace): The parsed arguments.

    Raises:
        ConfigError: If the config file is malformed or a flag has an invalid value.

    Returns:
        RunConfig: The configuration.
    """
    config = RunConfig()
    if args.config:
        config.load_file(args.config)

    for name in config.keys():
        value = getattr(args, name, None)
        if value is None:
            continue
        try:
            config.set(name, value)
        except ValueError as error:
            raise ConfigError(f"--{name}: {error}", source=FLAGS_SOURCE) from error

    return config
