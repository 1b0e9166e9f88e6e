"""The inputs of a command line run and the records written with its outputs."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import metadata
from typing import Any, Iterable

import numpy as np
import scipy

from cerbernetix.bernstein.config import RunConfig, format_spec, read_spec_file
from cerbernetix.bernstein.core import BernsteinSpec
from cerbernetix.bernstein.errors import ConfigError
from cerbernetix.bernstein.files import read_grid_function, write_csv_file
from cerbernetix.bernstein.operators import Grid, GridFunction, default_gamma, graded_grid
from cerbernetix.bernstein.sonine import SoninePair, build_pair

# The name of the distribution, for the version record.
PACKAGE = "cerbernetix.bernstein"

# The suffix of the run-summary files.
SUMMARY_SUFFIX = ".summary.csv"


@lru_cache(maxsize=1)
def versions() -> dict[str, str]:
    """Gives the versions of the package and of its numerical stack.

    Returns:
        dict[str, str]: The versions by package name.
    """
    try:
        version = metadata.version(PACKAGE)
    except metadata.PackageNotFoundError:
        version = "unknown"
    return {PACKAGE: version, "numpy": np.__version__, "scipy": scipy.__version__}


def summary_path(filename: str) -> str:
    """Gives the path of the run-summary file of an output.

    Args:
        filename (str): The path of the output, like "runs/ivp.csv".

    Returns:
        str: The path of the summary, like "runs/ivp.summary.csv".
    """
    stem, _ = os.path.splitext(filename)
    return stem + SUMMARY_SUFFIX


@dataclass(frozen=True)
class RunContext:
    """The command, its configuration and the Bernstein function of a run.

    Attributes:
        command (str): The name of the command.
        config (RunConfig): The configuration of the run.
        spec (BernsteinSpec): The Bernstein function read from the spec file.
    """

    command: str
    config: RunConfig
    spec: BernsteinSpec

    @classmethod
    def create(cls, command: str, config: RunConfig) -> RunContext:
        """Reads the spec file of a configuration.

        Args:
            command (str): The name of the command.
            config (RunConfig): The configuration of the run.

        Raises:
            ConfigError: If the spec file is not set or is malformed.

        Returns:
            RunContext: The context of the run.
        """
        if not config.spec:
            raise ConfigError("the spec file is not set, use --spec or spec= in a config file")
        return cls(command, config, read_spec_file(config.spec))

    @property
    def gamma(self) -> float:
        """The grading exponent, from the configuration or chosen from the spec."""
        if self.config.gamma is None:
            return default_gamma(self.spec)
        return self.config.gamma

    @property
    def out(self) -> str:
        """The path of the main output, "<command>.csv" when not configured."""
        return self.config.out or f"{self.command}.csv"

    def grid(self, horizon: float = None) -> Grid:
        """Builds the graded grid of the run.

        Args:
            horizon (float, optional): The end of the grid, T if None. Defaults to None.

        Returns:
            Grid: The grid of M cells.
        """
        return graded_grid(self.config.T if horizon is None else horizon, self.config.M, self.gamma)

    def pair(self, horizon: float = None) -> SoninePair:
        """Builds the Sonine pair of the spec.

        Args:
            horizon (float, optional): A horizon to cover beyond T. Defaults to None.

        Returns:
            SoninePair: The pair, trusted up to max(T, horizon).
        """
        horizon = self.config.T if horizon is None else max(self.config.T, horizon)
        return build_pair(self.spec, horizon, self.config.stehfest_terms)

    def rhs(self) -> GridFunction:
        """Reads the right hand side of the run.

        Returns:
            GridFunction: The function of the g file, or 1 on the grid of the run when not set.
        """
        if self.config.g:
            return read_grid_function(self.config.g)
        return GridFunction.constant(self.grid(), 1.0)

    def comments(self, **extra: Any) -> dict[str, Any]:
        """Gives the comment header of the outputs.

        The header holds the command, the hash of the configuration, every input, the spec, the
        versions and the given extra records.

        Returns:
            dict[str, Any]: The comments, in writing order.
        """
        comments = {"command": self.command, "config_hash": self.config.digest()}
        for line in self.config.canonical_lines():
            name, _, value = line.partition("=")
            comments[name] = value
        for line in format_spec(self.spec):
            name, _, value = line.partition("=")
            comments[f"spec.{name}"] = value
        comments.update(versions())
        comments.update(extra)
        return comments

    def write_summary(self, rows: Iterable[dict], **extra: Any) -> str:
        """Writes the run-summary records next to the main output.

        Args:
            rows (Iterable[dict]): The records.

        Returns:
            str: The path of the summary file.
        """
        filename = summary_path(self.out)
        write_csv_file(filename, rows, self.comments(**extra))
        return filename
