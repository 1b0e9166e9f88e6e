"""Test package for the config namespace."""
