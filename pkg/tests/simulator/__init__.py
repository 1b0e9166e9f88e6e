"""Test package for the simulator namespace."""
