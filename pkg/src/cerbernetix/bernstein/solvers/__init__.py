"""Solvers of the equations of the censored derivative.

It contains:
- `solve_ivp(pair, g, phi0, tol)`: Solves D_c φ = g with φ(0) = φ₀.
- `solve_resolvent(pair, lam, g, phi0, tol)`: Solves D_c φ = λφ + g with φ(0) = φ₀.
- `evolve_cauchy(pair, g0, dt, steps, tol)`: Implicit Euler steps of ∂ₜu = -D_c u.
- `solve_nonlinear(pair, gfunc, lipschitz, h, phi0, tol)`: Solves D_c φ = G(φ) + h.
- `lifetime_laplace(pair, grid, x, lam, tol)`: The Laplace transform of the lifetime.
- `lifetime_moments(pair, grid, x, orders, tol)`: The moments of the lifetime.
- `SeriesSolution`: A solution with its certificates.
- `CensoredSystem`, `censored_system(pair, grid)`: The censored operators of a pair on a grid.

Examples:
```python
import numpy as np
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.operators import GridFunction, graded_grid
from cerbernetix.bernstein.solvers import solve_ivp
from cerbernetix.bernstein.sonine import build_pair

pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
ones = GridFunction.constant(graded_grid(1.0, 256, 2.0), 1.0)

result = solve_ivp(pair, ones, 0.0, 1e-8)
print(result.solution.values[-1])   # close to 3.105230
print(result.summary())
```
"""
from cerbernetix.bernstein.operators.solution import SeriesSolution
from cerbernetix.bernstein.solvers.evolution import evolve_cauchy
from cerbernetix.bernstein.solvers.ivp import solve_ivp
from cerbernetix.bernstein.solvers.lifetime import lifetime_laplace, lifetime_moments
from cerbernetix.bernstein.solvers.nonlinear import solve_nonlinear, window_length
from cerbernetix.bernstein.solvers.resolvent import resolvent_series, solve_resolvent
from cerbernetix.bernstein.solvers.system import CensoredSystem, censored_system
