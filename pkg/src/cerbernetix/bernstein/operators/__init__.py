"""Grid realizations of the Bernstein integrals and derivatives.

It contains:
- `Grid`, `GridFunction`: Nodes and piecewise linear functions sampled on them.
- `ExtensionMode`: The killing or sticky extension of a function to (-∞, 0].
- `graded_grid(T, M, gamma)`: The graded grid x_j = T (j/M)^γ.
- `support_grid(T, start, stop, step)`: A grid fitted to a compactly supported function.
- `default_gamma(spec)`: The grading exponent max(2, 1/α_min).
- `rl_integral(pair, phi)`: The Bernstein-Riemann-Liouville integral at the nodes.
- `rl_integral_at(pair, phi, points)`: The same integral at arbitrary points.
- `rl_derivative(pair, phi, mode)`: The derivative of the killing or sticky extension.
- `censored_derivative(pair, phi)`: The censored derivative, which annihilates constants.
- `apply_K(pair, phi)`: The kernel operator, the integral of μ̄φ.
- `censored_integral(pair, g, tol)`: The Neumann series of the censored integral.
- `expected_censoring_time(pair, grid, x, n)`: The mean of the (n+1)-th waiting time.
- `symbol_check(spec, pair, phi, lams)`: Compares the derivative with its Laplace symbol.
- `yosida_check(spec, pair, phi)`: Compares the derivative with those of Yosida approximants.
- `marchaud_weights(tail, grid)`, `discrete_inverse(pair, grid)`: The discrete operators.
- `censored_series(operators, values, tol, q)`: The certified series on the first nodes.
- `SeriesSolution`: A partial sum with its certificates.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.operators import GridFunction, apply_K, graded_grid
from cerbernetix.bernstein.sonine import build_pair

pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
ones = GridFunction.constant(graded_grid(1.0, 128, 2.0), 1.0)

print(apply_K(pair, ones).values[-1]) # 1.0
```
"""
from cerbernetix.bernstein.operators.derivative import censored_derivative, rl_derivative
from cerbernetix.bernstein.operators.grid import (
    ExtensionMode,
    Grid,
    GridFunction,
    default_gamma,
    graded_grid,
    support_grid,
)
from cerbernetix.bernstein.operators.integral import (
    apply_K,
    censored_integral,
    censored_series,
    expected_censoring_time,
    rl_integral,
    rl_integral_at,
)
from cerbernetix.bernstein.operators.solution import SeriesSolution
from cerbernetix.bernstein.operators.symbol import SymbolReport, symbol_check, yosida_check
from cerbernetix.bernstein.operators.weights import (
    DiscreteInverse,
    MarchaudWeights,
    discrete_inverse,
    effective_contraction,
    marchaud_weights,
)
