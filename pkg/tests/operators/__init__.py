"""Test package for the operators namespace."""
