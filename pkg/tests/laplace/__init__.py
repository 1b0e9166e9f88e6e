"""Test package for the laplace namespace."""
