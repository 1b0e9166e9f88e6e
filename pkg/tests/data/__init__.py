"""Test package for the data namespace."""
