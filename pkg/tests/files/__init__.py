"""Test package for the files namespace."""
