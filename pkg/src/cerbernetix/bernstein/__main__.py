"""Runs the `bernstein` command line with `python -m cerbernetix.bernstein`."""
from cerbernetix.bernstein.cli import main

main()
