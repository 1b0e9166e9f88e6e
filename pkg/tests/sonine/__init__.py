"""Test package for the sonine namespace."""
