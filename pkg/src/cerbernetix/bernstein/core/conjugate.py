"""Conjugate Bernstein functions f★(λ) = λ / f(λ) and the classification of their triplets.

The triplet (a★, b★, μ★) of the conjugate follows from the killing rate, the drift and the first
two moments of μ. Eight cases are distinguished:

| case | a   | b   | masses          | a★           | b★           |
|------|-----|-----|-----------------|--------------|--------------|
| 1    | 0   | 0   | m1 = ∞          | 0            | 1/m0         |
| 2    | 0   | 0   | m0 = ∞, m1 < ∞  | 1/m1         | 0            |
| 3    | 0   | 0   | m0, m1 < ∞      | 1/m1         | 1/m0         |
| 4    | > 0 | 0   | m0 = ∞          | 0            | 0            |
| 5    | > 0 | 0   | m0 < ∞          | 0            | 1/(a + m0)   |
| 6    | 0   | > 0 | m1 = ∞          | 0            | 0            |
| 7    | 0   | > 0 | m1 < ∞          | 1/(b + m1)   | 0            |
| 8    | > 0 | > 0 | any             | 0            | 0            |

Examples:
```python
from cerbernetix.bernstein.core import classify_conjugate

classification = classify_conjugate(a=1.0, b=0.0, m0=3.0, m1=math.inf)
print(classification.case_id, classification.b_star) # 5 0.25
```
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from cerbernetix.bernstein.core.evaluators import as_float_array, restore_shape
from cerbernetix.bernstein.core.families import BernsteinSpec, CustomTriplet, Stable, evaluate
from cerbernetix.bernstein.errors import DegenerateMeasureError, DomainError, SingularConjugateError
from cerbernetix.bernstein.laplace import TransformEvaluator, invert


@dataclass(frozen=True)
class ConjugateClassification:
    """The case of a triplet and the killing rate and drift of its conjugate.

    Attributes:
        case_id (int): The case, from 1 to 8.
        a_star (float): The killing rate of the conjugate.
        b_star (float): The drift of the conjugate.
        m0 (float): The total mass of μ.
        m1 (float): The first moment of μ.
    """

    case_id: int
    a_star: float
    b_star: float
    m0: float
    m1: float


def _extended_real(name: str, value: float) -> float:
    value = float(value)
    if not value >= 0.0:
        raise DomainError(f"{name} must be a nonnegative extended real, got {value}")
    return value


def _case_id(a: float, b: float, m0: float, m1: float) -> int:
    if a == 0.0 and b == 0.0:
        if m1 == math.inf:
            return 1
        return 2 if m0 == math.inf else 3
    if b == 0.0:
        return 4 if m0 == math.inf else 5
    if a == 0.0:
        return 6 if m1 == math.inf else 7
    return 8


def classify_conjugate(a: float, b: float, m0: float, m1: float) -> ConjugateClassification:
    """Classifies a triplet and gives the killing rate and drift of the conjugate.

    Args:
        a (float): The killing rate, finite and nonnegative.
        b (float): The drift, finite and nonnegative.
        m0 (float): The total mass of μ, possibly `inf`.
        m1 (float): The first moment of μ, possibly `inf`.

    Raises:
        DomainError: If an input is negative or the rates are not finite.
        DegenerateMeasureError: If a = b = 0 and m0 = 0, the zero Bernstein function.

    Returns:
        ConjugateClassification: The case and the conjugate rates.

    Examples:
    ```python
    from cerbernetix.bernstein.core import classify_conjugate

    classification = classify_conjugate(a=0.0, b=0.0, m0=math.inf, m1=2.0)
    print(classification.case_id, classification.a_star) # 2 0.5
    ```
    """
    a = _extended_real("a", a)
    b = _extended_real("b", b)
    m0 = _extended_real("m0", m0)
    m1 = _extended_real("m1", m1)

    if not math.isfinite(a) or not math.isfinite(b):
        raise DomainError("the killing rate and the drift must be finite")

    if a == 0.0 and b == 0.0 and m0 == 0.0:
        raise DegenerateMeasureError("a = b = 0 and m0 = 0 describe the zero Bernstein function")

    a_star = 0.0 if a > 0.0 else 1.0 / (b + m1)
    b_star = 0.0 if b > 0.0 else 1.0 / (a + m0)

    return ConjugateClassification(
        case_id=_case_id(a, b, m0, m1),
        a_star=a_star,
        b_star=b_star,
        m0=m0,
        m1=m1,
    )


def classify_spec(spec: BernsteinSpec) -> ConjugateClassification:
    """Classifies the triplet of a Bernstein function.

    Args:
        spec (BernsteinSpec): The Bernstein function.

    Returns:
        ConjugateClassification: The case and the conjugate rates.
    """
    return classify_conjugate(spec.a, spec.b, spec.m0, spec.m1)


def conjugate_eval(spec: BernsteinSpec, lam: Any) -> float | np.ndarray:
    """Evaluates the conjugate Bernstein function f★(λ) = λ / f(λ).

    Args:
        spec (BernsteinSpec): The Bernstein function.
        lam (Any): The points λ, positive.

    Raises:
        DomainError: If a point is not positive.
        SingularConjugateError: If f underflows to 0.

    Returns:
        float | np.ndarray: The values of f★.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, StableMixture, conjugate_eval

    spec = BernsteinSpec(StableMixture(((1.0, 0.3), (1.0, 0.7))))
    print(conjugate_eval(spec, 1.0)) # 0.5
    ```
    """
    points, scalar = as_float_array(lam)
    values = np.asarray(evaluate(spec, points), dtype=float)

    if np.any(values == 0.0):
        raise SingularConjugateError("f underflows to 0, its conjugate cannot be evaluated")

    return restore_shape(points / values, scalar)


@dataclass(frozen=True)
class ConjugateExponent:
    """The jump part λ ↦ λ/f(λ) - a★ - b★λ of a conjugate Bernstein function."""

    spec: BernsteinSpec
    a_star: float = 0.0
    b_star: float = 0.0

    def __call__(self, lam: Any) -> float | np.ndarray:
        points = np.asarray(lam, dtype=float)
        return conjugate_eval(self.spec, points) - self.a_star - self.b_star * points


@dataclass(frozen=True)
class PotentialDensity:
    """The tail of the conjugate Lévy measure, obtained by inverting 1/f - a★/λ - b★."""

    spec: BernsteinSpec
    a_star: float = 0.0
    b_star: float = 0.0
    terms: int = 14

    def transform(self, lam: Any) -> float | np.ndarray:
        """The Laplace transform of the tail.

        Args:
            lam (Any): The points λ, positive.

        Returns:
            float | np.ndarray: The values 1/f(λ) - a★/λ - b★.
        """
        points = np.asarray(lam, dtype=float)
        return 1.0 / evaluate(self.spec, points) - self.a_star / points - self.b_star

    def __call__(self, x: Any) -> float | np.ndarray:
        return invert(TransformEvaluator(self.transform), x, terms=self.terms)


def conjugate(spec: BernsteinSpec) -> BernsteinSpec:
    """Builds the conjugate Bernstein function f★ = λ/f as a spec.

    The conjugate of λ^α is λ^{1-α}. Any other function gives a custom triplet whose exponent is
    λ/f and whose tail is the potential density of f, obtained by numerical Laplace inversion. The
    masses of the conjugate measure are not derived and stay unbounded.

    Args:
        spec (BernsteinSpec): The Bernstein function.

    Raises:
        DegenerateMeasureError: If the spec is the zero Bernstein function.

    Returns:
        BernsteinSpec: The conjugate.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable, conjugate

    print(conjugate(BernsteinSpec(Stable(0.3))).family.alpha) # 0.7
    ```
    """
    if spec.is_stable:
        return BernsteinSpec(Stable(1.0 - spec.family.alpha))

    classification = classify_spec(spec)
    completely_monotone = spec.is_closed_form or spec.family.completely_monotone

    return BernsteinSpec(
        CustomTriplet(
            tail=PotentialDensity(spec, classification.a_star, classification.b_star),
            completely_monotone=completely_monotone,
            exponent=ConjugateExponent(spec, classification.a_star, classification.b_star),
        ),
        a=classification.a_star,
        b=classification.b_star,
    )
