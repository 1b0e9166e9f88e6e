"""Test package for the errors module."""
