"""Laplace transforms and their numerical inversion.

It contains:
- `forward(phi, lam)`: Integrates a grid function against e^{-λx} on [0, T].
- `transform(func, lam)`: Computes the Laplace transform of an evaluator on (0, ∞).
- `TransformEvaluator`: A transform tagged with its regularity class.
- `invert(transform, x, terms)`: Inverts a completely monotone transform by Gaver-Stehfest.
- `stehfest_coefficients(terms)`: Gives the Gaver-Stehfest weights.

Examples:
```python
from cerbernetix.bernstein.laplace import TransformEvaluator, invert, transform

print(invert(TransformEvaluator(lambda s: 1 / s), 3.0)) # 1.0
print(transform(lambda x: 1.0, 2.0))                    # 0.5
```
"""
from cerbernetix.bernstein.laplace.stehfest import (
    DEFAULT_TERMS,
    Smoothness,
    TransformEvaluator,
    check_terms,
    invert,
    stehfest_coefficients,
)
from cerbernetix.bernstein.laplace.forward_transform import forward, transform
