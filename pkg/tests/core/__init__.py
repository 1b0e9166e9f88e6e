"""Test package for the core namespace."""
