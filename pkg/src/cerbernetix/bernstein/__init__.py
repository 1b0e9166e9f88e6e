"""`py-bernstein` is a numerical library for fractional calculus driven by Bernstein functions.

It contains:
- `core` - Bernstein function models, conjugates, assumption checks and Yosida approximants.
- `laplace` - Forward Laplace transforms of grid functions and Gaver-Stehfest inversion.
- `sonine` - Sonine pairs built from a Bernstein function, and their checks.
- `operators` - Grids, Riemann-Liouville integrals and derivatives, censored operators.
- `solvers` - Series solvers for the censored initial value and resolvent problems.
- `simulator` - Monte Carlo simulation of the censored decreasing subordinator.
- `cli` - The `bernstein` command line front end.
- `config` - Strict run configurations and spec files.
- `data` - Value mappers casting the raw configuration values.
- `files` - CSV files with a comment header, and grid functions.
- `logging` - The log setup of the command line.
- `errors` - The errors raised by the library.
- `testing` - Helpers for the unit tests.
"""
