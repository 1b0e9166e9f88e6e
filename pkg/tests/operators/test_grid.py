"""Test the grids and the grid functions."""
import numpy as np

from cerbernetix.bernstein.core import BernsteinSpec, Stable, StableMixture
from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.operators import (
    Grid,
    GridFunction,
    default_gamma,
    graded_grid,
    support_grid,
)
from cerbernetix.bernstein.testing import TestCase, test_cases


class TestGrid(TestCase):
    """Test suite for the grids."""

    def test_graded_grid(self):
        """Tests the nodes of graded grids."""
        grid = graded_grid(4.0, 8, 1.0)
        self.assertAllClose(grid.nodes, np.arange(9) / 2.0)
        self.assertEqual(grid.cells, 8)
        self.assertEqual(len(grid), 9)
        self.assertEqual(grid.horizon, 4.0)
        self.assertTrue(grid.has_origin)

        squared = graded_grid(1.0, 16, 2.0)
        self.assertAllClose(squared.nodes[:3], [0.0, 1.0 / 256.0, 4.0 / 256.0])
        self.assertEqual(squared.nodes[-1], 1.0)
        self.assertEqual(squared.gamma, 2.0)

    def test_graded_grid_cache(self):
        """Tests identical arguments give the same grid."""
        self.assertIs(graded_grid(2.0, 32, 2.0), graded_grid(2.0, 32, 2.0))

    @test_cases(
        [
            ["too few cells", 1.0, 4, 2.0],
            ["fractional cells", 1.0, 8.5, 2.0],
            ["null horizon", 0.0, 16, 2.0],
            ["infinite horizon", np.inf, 16, 2.0],
            ["null grading", 1.0, 16, 0.0],
        ]
    )
    def test_graded_grid_domain(self, _, horizon, cells, gamma):
        """Tests the validation of the grid parameters."""
        with self.assertRaises(DomainError):
            graded_grid(horizon, cells, gamma)

    @test_cases(
        [
            ["too few nodes", np.arange(5.0)],
            ["negative node", np.arange(10.0) - 1.0],
            ["not increasing", np.array([0, 1, 2, 3, 3, 4, 5, 6, 7, 8], dtype=float)],
            ["not finite", np.array([0, 1, 2, 3, 4, 5, 6, 7, 8, np.inf])],
            ["matrix", np.arange(20.0).reshape(2, 10)],
        ]
    )
    def test_validation(self, _, nodes):
        """Tests the validation of the nodes."""
        with self.assertRaises(DomainError):
            Grid(nodes)

    def test_read_only(self):
        """Tests the nodes cannot be changed."""
        grid = Grid(np.arange(10.0))
        with self.assertRaises(ValueError):
            grid.nodes[0] = 1.0

    def test_index(self):
        """Tests the lookup of the nodes."""
        grid = graded_grid(4.0, 8, 1.0)
        self.assertEqual(grid.index(1.5), 3)
        self.assertEqual(grid.from_index(1.2), 3)
        self.assertEqual(grid.from_index(5.0), 9)
        with self.assertRaises(DomainError):
            grid.index(1.2)

    @test_cases(
        [
            ["square root", Stable(0.5), 2.0],
            ["small exponent", Stable(0.2), 5.0],
            ["mixture", StableMixture(((1.0, 0.3), (1.0, 0.7))), 1.0 / 0.3],
        ]
    )
    def test_default_gamma(self, _, family, expected):
        """Tests the default grading exponent."""
        self.assertAlmostEqual(default_gamma(BernsteinSpec(family)), expected)

    def test_support_grid(self):
        """Tests the grids fitted to a support."""
        grid = support_grid(20.0, 0.5, 3.0, 0.01)
        nodes = grid.nodes

        self.assertEqual(nodes[0], 0.0)
        self.assertEqual(nodes[-1], 20.0)
        self.assertTrue(np.all(np.diff(nodes) > 0.0))

        inside = nodes[(nodes >= 0.5) & (nodes <= 3.0 + 1e-12)]
        self.assertEqual(len(inside), 251)
        self.assertAllClose(np.diff(inside), np.full(250, 0.01), rtol=1e-9)
        self.assertTrue(np.all(np.diff(nodes[nodes >= 3.0]) >= 0.01 - 1e-12))

    @test_cases(
        [
            ["support after the horizon", 2.0, 0.5, 3.0, 0.1],
            ["reversed support", 20.0, 3.0, 0.5, 0.1],
            ["null step", 20.0, 0.5, 3.0, 0.0],
            ["wide step", 20.0, 0.5, 3.0, 5.0],
        ]
    )
    def test_support_grid_domain(self, _, horizon, start, stop, step):
        """Tests the validation of the support grids."""
        with self.assertRaises(DomainError):
            support_grid(horizon, start, stop, step)


class TestGridFunction(TestCase):
    """Test suite for the grid functions."""

    def setUp(self):
        self.grid = graded_grid(4.0, 8, 1.0)

    def test_from_function(self):
        """Tests the sampling of a function."""
        phi = GridFunction.from_function(self.grid, lambda x: x**2)
        self.assertAllClose(phi.values, self.grid.nodes**2)
        self.assertIs(phi.nodes, self.grid.nodes)
        self.assertTrue(phi.is_complete)

    def test_constant(self):
        """Tests constant functions, also from a scalar function."""
        self.assertAllClose(GridFunction.constant(self.grid, 3.0).values, np.full(9, 3.0))
        scalar = GridFunction.from_function(self.grid, lambda x: 2.0)
        self.assertAllClose(scalar.values, np.full(9, 2.0))

    def test_missing_values(self):
        """Tests the values before the first defined index are missing."""
        phi = GridFunction(self.grid, np.arange(9.0), defined_from=2)
        self.assertTrue(np.all(np.isnan(phi.values[:2])))
        self.assertFalse(phi.is_complete)
        self.assertEqual(phi.sup_norm(), 8.0)

        self.assertEqual(phi.interpolate(1.25), 2.5)
        with self.assertRaises(DomainError):
            phi.interpolate(0.5)

    @test_cases(
        [
            ["wrong length", np.arange(8.0), 0],
            ["not finite", np.append(np.arange(8.0), np.nan), 0],
            ["index out of range", np.arange(9.0), 9],
        ]
    )
    def test_validation(self, _, values, defined_from):
        """Tests the validation of the values."""
        with self.assertRaises(DomainError):
            GridFunction(self.grid, values, defined_from)

    def test_interpolate(self):
        """Tests the linear interpolation between the nodes."""
        phi = GridFunction.from_function(self.grid, lambda x: x**2)

        self.assertEqual(phi.interpolate(0.25), 0.125)
        self.assertAllClose(phi.interpolate([1.0, 4.0]), [1.0, 16.0])
        with self.assertRaises(DomainError):
            phi.interpolate(4.5)

    def test_sup_norm(self):
        """Tests the sup norm after a point."""
        phi = GridFunction.from_function(self.grid, lambda x: 3.0 - x)
        self.assertEqual(phi.sup_norm(), 3.0)
        self.assertEqual(phi.sup_norm(1.0), 2.0)
        self.assertEqual(phi.sup_norm(3.5), 1.0)
        self.assertEqual(phi.sup_norm(5.0), 0.0)

    def test_with_values(self):
        """Tests a new function on the same grid."""
        phi = GridFunction(self.grid, np.arange(9.0), defined_from=1)
        other = phi.with_values(np.ones(9))

        self.assertIs(other.grid, self.grid)
        self.assertEqual(other.defined_from, 1)
        self.assertEqual(phi.with_values(np.ones(9), 0).defined_from, 0)
