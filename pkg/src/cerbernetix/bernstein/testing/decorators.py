"""Decorators for parametric tests.

Examples:
```python
from cerbernetix.bernstein import testing

# A case is a list of positional arguments, titled by its first item, or a dictionary of named
# arguments, titled by its "title", "message" or "_" key.
@testing.test_cases([
    ["λ = 4", 4.0, 2.0],
    {"title": "λ = 9", "lam": 9.0, "expected": 3.0},
])
def test_square_root(self, title, lam, expected):
    self.assertAlmostEqual(BernsteinSpec(Stable(0.5))(lam), expected)
```
"""
from __future__ import annotations

import functools
from typing import Any, Callable

# The keys that may hold the title of a case given as a dictionary.
TITLE_KEYS = ("title", "message", "_")


def _bind_case(index: int, case: Any, args: tuple, kwargs: dict) -> tuple[str, list, dict]:
    if isinstance(case, dict):
        title = next((case[key] for key in TITLE_KEYS if key in case), f"case {index}")
        return title, list(args), {**kwargs, **case}

    if isinstance(case, (list, tuple)):
        return case[0] or f"case {index}", [*case, *args], kwargs

    return f"case {index}", [case, *args], kwargs


def test_cases(cases: list[dict | list]) -> Callable:
    """Creates a decorator that runs a test method once per case, each in its own sub-test.

    Args:
        cases (list[dict | list]): The parameters of each case, either a list of positional
        arguments or a dictionary of named arguments. The parameters must match the signature of the
        test method.

    Raises:
        ValueError: If no test case is supplied.

    Returns:
        Callable: The decorator.

    Examples:
    ```python
    from cerbernetix.bernstein.testing import test_cases

    @test_cases([
        ["one", 1.0, 1.0],
        ["four", 4.0, 2.0],
    ])
    def test_square_root(self, title, lam, expected):
        self.assertAlmostEqual(math.sqrt(lam), expected)
    ```
    """
    if not isinstance(cases, (list, tuple)) or not cases:
        raise ValueError("A list of test cases is required.")

    def decorator(method: Callable) -> Callable:
        @functools.wraps(method)
        def wrapper(self, *args, **kwargs) -> None:
            for index, case in enumerate(cases):
                title, case_args, case_kwargs = _bind_case(index, case, args, kwargs)
                with self.subTest(title):
                    method(self, *case_args, **case_kwargs)

        return wrapper

    return decorator


# Keep pytest from collecting this helper as a test when test modules import it.
test_cases.__test__ = False
