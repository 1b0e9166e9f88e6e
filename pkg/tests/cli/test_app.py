"""Test the command line runs."""
import math
import os
import tempfile
import types
import unittest
from unittest.mock import Mock, patch

from cerbernetix.bernstein import cli
from cerbernetix.bernstein.cli import COMMANDS, EXIT_DOMAIN, EXIT_NUMERICS, EXIT_OK, run
from cerbernetix.bernstein.errors import NumericsError
from cerbernetix.bernstein.files import CSVFile, read_grid_function, write_grid_function
from cerbernetix.bernstein.operators import GridFunction, graded_grid

# K(1) / (1 - q) = 2√π / (π - 2) for the square root
MEAN_LIFETIME = 2.0 * math.sqrt(math.pi) / (math.pi - 2.0)


@patch("cerbernetix.bernstein.cli.app.setup_logging")
class TestRun(unittest.TestCase):
    """Test suite for the command line runs."""

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with
        self.spec = self.path("stable05.cfg")
        with open(self.spec, "w", encoding="utf-8") as file:
            file.write("# the square root\nfamily=stable\nalpha=0.5\n")

    def tearDown(self):
        self.folder.cleanup()

    def path(self, name):
        """Gives a path in the temporary folder."""
        return os.path.join(self.folder.name, name)

    def run_command(self, command, *flags, out="out.csv"):
        """Runs a command on the square root."""
        return run([command, "--spec", self.spec, "--out", self.path(out), *flags])

    def read(self, name):
        """Reads an output file."""
        file = CSVFile(self.path(name))
        return file.read_file(), file.comments

    def read_bytes(self, name):
        """Reads an output file as bytes."""
        with open(self.path(name), "rb") as file:
            return file.read()

    def test_sonine(self, _):
        """Test the table of the pair, with q in the footer."""
        self.assertEqual(self.run_command("sonine", "--M", "16"), EXIT_OK)

        rows, comments = self.read("out.csv")
        self.assertEqual(len(rows), 16)
        self.assertEqual(list(rows[0]), ["x", "mu_bar", "k", "K"])
        self.assertAlmostEqual(float(rows[-1]["K"]), 2.0 / math.sqrt(math.pi), places=12)
        self.assertAlmostEqual(float(comments["q"]), 0.636620, places=6)
        self.assertLess(float(comments["residual"]), 1e-8)
        self.assertEqual(comments["command"], "sonine")
        self.assertEqual(len(comments["config_hash"]), 64)
        self.assertEqual(comments["spec.alpha"], "0.5")

    def test_identical_outputs(self, _):
        """Test identical runs write identical files."""
        self.run_command("sonine", "--M", "16", out="first.csv")
        self.run_command("sonine", "--M", "16", out="first.csv")
        self.run_command("sonine", "--M", "16", out="second.csv")

        first, second = self.read("first.csv"), self.read("second.csv")
        self.assertEqual(first[0], second[0])
        self.assertNotEqual(first[1]["config_hash"], second[1]["config_hash"])

        before = self.read_bytes("first.csv")
        self.run_command("sonine", "--M", "16", out="first.csv")
        self.assertEqual(self.read_bytes("first.csv"), before)

    def test_solve_ivp(self, _):
        """Test the solution and its run summary."""
        self.assertEqual(self.run_command("solve-ivp", "--M", "64", "--tol", "1e-6"), EXIT_OK)

        solution = read_grid_function(self.path("out.csv"))
        self.assertEqual(len(solution), 65)
        self.assertEqual(solution.values[0], 0.0)
        self.assertAlmostEqual(solution.values[-1], MEAN_LIFETIME, delta=0.1 * MEAN_LIFETIME)

        rows, comments = self.read("out.summary.csv")
        self.assertEqual(rows[0]["command"], "solve-ivp")
        self.assertGreater(int(rows[0]["terms_used"]), 0)
        self.assertLessEqual(float(rows[0]["residual"]), 1e-5)
        self.assertIn("config_hash", comments)

    def test_resolve(self, _):
        """Test the resolvent with a right hand side read from a file."""
        g = self.path("g.csv")
        write_grid_function(g, GridFunction.constant(graded_grid(1.0, 32, 2.0), 0.0))

        code = self.run_command("resolve", "--g", g, "--lam=-2", "--phi0", "1", "--tol", "1e-6")
        self.assertEqual(code, EXIT_OK)

        solution = read_grid_function(self.path("out.csv"))
        self.assertEqual(solution.values[0], 1.0)
        self.assertTrue(0.0 < solution.values[-1] < 1.0)

    def test_resolve_many_factors(self, _):
        """Test the resolvent needs a single factor."""
        self.assertEqual(self.run_command("resolve", "--lam", "1,2", "--M", "16"), EXIT_DOMAIN)

    def test_evolve(self, _):
        """Test the trajectory has a row per step and node."""
        code = self.run_command("evolve", "--M", "16", "--dt", "0.5", "--steps", "2")
        self.assertEqual(code, EXIT_OK)

        rows, _ = self.read("out.csv")
        self.assertEqual(len(rows), 3 * 17)
        self.assertEqual(list(rows[0]), ["step", "time", "x", "value"])
        self.assertEqual(rows[-1]["time"], "1.0")

        summary, _ = self.read("out.summary.csv")
        self.assertAlmostEqual(float(summary[0]["sup_norm"]), 1.0, places=6)

    def test_lifetime_lt(self, _):
        """Test the transform of the lifetime decreases from 1."""
        code = self.run_command("lifetime-lt", "--M", "64", "--lam", "0,0.5,2", "--tol", "1e-6")
        self.assertEqual(code, EXIT_OK)

        rows, _ = self.read("out.csv")
        values = [float(row["value"]) for row in rows]
        self.assertEqual(values[0], 1.0)
        self.assertTrue(1.0 > values[1] > values[2] > 0.0)

    def test_simulate(self, _):
        """Test the samples and the plain estimates."""
        code = self.run_command("simulate", "--paths", "200", "--seed", "7", "--lam", "1")
        self.assertEqual(code, EXIT_OK)

        rows, comments = self.read("out.csv")
        self.assertEqual(list(rows[0]), ["path_id", "n", "position", "sigma"])
        self.assertEqual(rows[0]["path_id"], "0")
        self.assertEqual(rows[0]["n"], "1")
        self.assertEqual(sum(int(comments[f"stopped_{rule}"]) for rule in ("floor", "n_max")), 200)

        summary, _ = self.read("out.summary.csv")
        names = [row["name"] for row in summary]
        self.assertEqual(names, ["mean_lifetime", "first_censoring_time", "lifetime_lt_1.0"])
        self.assertEqual(summary[0]["comparator"], "nan")

    def test_simulate_seeded(self, _):
        """Test the samples depend on the seed, not on the number of workers."""
        self.run_command("simulate", "--paths", "64", "--block-size", "16", out="one.csv")
        self.run_command(
            "simulate", "--paths", "64", "--block-size", "16", "--workers", "4", out="four.csv"
        )
        self.assertEqual(self.read("one.csv")[0], self.read("four.csv")[0])

    def test_compare(self, _):
        """Test the estimates are compared with the series values."""
        code = self.run_command("compare", "--paths", "2000", "--seed", "3", "--lam", "1")
        self.assertEqual(code, EXIT_OK)

        rows, comments = self.read("out.csv")
        self.assertEqual(
            [row["name"] for row in rows],
            ["mean_lifetime", "first_censoring_time", "lifetime_lt_1.0"],
        )
        self.assertAlmostEqual(float(rows[0]["comparator"]), MEAN_LIFETIME, places=8)
        self.assertAlmostEqual(float(rows[1]["comparator"]), 2.0 / math.sqrt(math.pi), places=12)
        self.assertLess(float(comments["max_abs_z"]), 5.0)
        self.assertGreater(float(comments["ks_pvalue"]), 1e-4)

    def test_verify(self, _):
        """Test the invariant suite passes for the square root."""
        code = self.run_command("verify", "--M", "512", "--tol", "1e-6")
        self.assertEqual(code, EXIT_OK)

        rows, comments = self.read("out.csv")
        self.assertEqual(comments["failed"], "0")
        self.assertIn("mean_lifetime", [row["check"] for row in rows])

    def test_malformed_spec(self, _):
        """Test a malformed spec file is a validation failure."""
        with open(self.spec, "w", encoding="utf-8") as file:
            file.write("family=stable\nalpha=1.5\n")

        with self.assertLogs("cerbernetix.bernstein.cli.app", "ERROR") as logs:
            self.assertEqual(self.run_command("sonine"), EXIT_DOMAIN)
        self.assertIn(f"{self.spec}:2", logs.output[0])

    def test_malformed_config(self, _):
        """Test a malformed config file is a validation failure with its line."""
        config = self.path("run.cfg")
        with open(config, "w", encoding="utf-8") as file:
            file.write("T=1\nM=64\ntol=small\n")

        with self.assertLogs("cerbernetix.bernstein.cli.app", "ERROR") as logs:
            self.assertEqual(self.run_command("sonine", "--config", config), EXIT_DOMAIN)
        self.assertIn(f"{config}:3", logs.output[0])

    def test_invalid_inputs(self, _):
        """Test the other validation failures."""
        self.assertEqual(run(["sonine"]), EXIT_DOMAIN)
        self.assertEqual(run(["integrate"]), EXIT_DOMAIN)
        self.assertEqual(self.run_command("solve-ivp", "--g", self.path("none.csv")), EXIT_DOMAIN)
        self.assertEqual(self.run_command("lifetime-lt", "--lam=-1"), EXIT_DOMAIN)

    def test_numerical_failure(self, _):
        """Test a numerical failure has its own exit code."""
        failing = Mock(side_effect=NumericsError("no decay"))
        with patch.dict(COMMANDS, {"sonine": (failing, "")}):
            self.assertEqual(self.run_command("sonine"), EXIT_NUMERICS)
        failing.assert_called_once()

    def test_logging(self, mock_setup: Mock):
        """Test the verbosity and the log file are passed to the log setup."""
        log, out = self.path("run.log"), self.path("out.csv")
        run(["sonine", "--spec", self.spec, "--M", "16", "--out", out, "-vv"])
        run(["sonine", "--spec", self.spec, "--M", "16", "--out", out, "--log", log, "-q"])

        self.assertEqual(mock_setup.call_args_list[0].args, (10, None))
        self.assertEqual(mock_setup.call_args_list[1].args, (40, log))


class TestEntryPoint(unittest.TestCase):
    """Test suite for the entry point of the command line."""

    def test_module_reachable(self):
        """Test the module of the runs is not shadowed by the exported entry point."""
        self.assertIsInstance(cli.app, types.ModuleType)
        self.assertIs(cli.main, cli.app.main)
        self.assertIs(cli.run, cli.app.run)

    def test_patch_target(self):
        """Test the log setup of the runs can be patched by its dotted path."""
        with patch("cerbernetix.bernstein.cli.app.setup_logging") as mock_setup:
            self.assertIs(cli.app.setup_logging, mock_setup)
