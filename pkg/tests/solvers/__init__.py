"""Test package for the solvers namespace."""
