"""Test package for the cli namespace."""
