"""Test package for the testing namespace."""
