"""Utilities for testing numerical code.

It contains:
- `test_cases(cases)`: Decorates a test method with parametric cases.
- `TestCase`: Extends the default Python TestCase with numerical assertions.

Examples:
```python
from cerbernetix.bernstein import testing
from cerbernetix.bernstein.core import BernsteinSpec, Stable

class TestStable(testing.TestCase):

    @testing.test_cases([
        ["square root", 0.5, 4.0, 2.0],
        {
            "title": "cubic root",
            "alpha": 1 / 3,
            "lam": 8.0,
            "expected": 2.0,
        },
    ])
    def test_eval(self, title, alpha, lam, expected):
        self.assertAlmostEqual(BernsteinSpec(Stable(alpha))(lam), expected)

    def test_tail(self):
        spec = BernsteinSpec(Stable(0.5))
        self.assertAllClose(spec.tail([1.0, 4.0]), [0.5641895835, 0.2820947918], rtol=1e-9)
```
"""
from cerbernetix.bernstein.testing.decorators import test_cases
from cerbernetix.bernstein.testing.test_case import TestCase
