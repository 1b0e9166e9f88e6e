"""Test package for the logging namespace."""
