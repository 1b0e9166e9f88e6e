"""Sonine pairs derived from Bernstein functions.

It contains:
- `SoninePair`: The pair (μ̄, k) with the integrals K and ∫K.
- `LevyTail`: The tail μ̄ and its integral, as used by the derivative operators.
- `build_pair(spec, horizon)`: Builds the pair of an admissible Bernstein function.
- `yosida_tail(spec, n, horizon)`: Builds the tail of a Yosida approximant.
- `convolution(pair, x)`: Evaluates μ̄ ∗ k.
- `sonine_residual(pair, grid)`: Measures the Sonine identity μ̄ ∗ k = 1.
- `transition_cdf(pair, y, v)`: The law of the position before the first jump across 0.
- `contraction_constant(pair, horizon)`: Computes q = sup μ̄K.
- `singular_integral(func, widths, power)`, `CumulativeIntegral`: Quadrature of singular integrands.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.sonine import build_pair, contraction_constant

pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)

print(pair.mu_bar(1.0))             # 0.5641895835477563
print(contraction_constant(pair))   # 0.6366197723675814
```
"""
from cerbernetix.bernstein.sonine.checks import (
    contraction_constant,
    convolution,
    sonine_residual,
    transition_cdf,
)
from cerbernetix.bernstein.sonine.pair import (
    LevyTail,
    Provenance,
    SoninePair,
    build_pair,
    yosida_tail,
)
from cerbernetix.bernstein.sonine.quadrature import (
    CumulativeIntegral,
    gauss_jacobi,
    gauss_legendre,
    singular_integral,
)
