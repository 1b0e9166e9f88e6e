"""Models of Bernstein functions f(λ) = a + bλ + ∫(1 - e^{-λt}) μ(dt).

Two closed-form families are provided, the one-sided stable exponents λ^α and their finite
mixtures Σ c_j λ^{α_j}. Any other Bernstein function is described by a `CustomTriplet` giving the
tail of its Lévy measure.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable, StableMixture

spec = BernsteinSpec(Stable(0.5))
print(spec(4.0))          # 2.0
print(spec.tail(1.0))     # 0.5641895835477563

mixture = BernsteinSpec(StableMixture(((1.0, 0.3), (1.0, 0.7))))
print(mixture(1.0))       # 2.0
```
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Union

import numpy as np
from scipy import integrate

from cerbernetix.bernstein.core.evaluators import (
    Evaluator,
    PowerSeries,
    as_float_array,
    restore_shape,
)
from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.laplace import transform

# The points used to estimate the large-λ power of a custom Bernstein function.
LEADING_POWER_POINTS = (1e6, 1e8)


def _check_exponent(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"a stable exponent must lie in (0, 1), got {alpha}")
    return alpha


@dataclass(frozen=True)
class Stable:
    """The stable Bernstein function f(λ) = λ^α.

    Attributes:
        alpha (float): The exponent, in (0, 1).
    """

    alpha: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _check_exponent(self.alpha))

    @property
    def terms(self) -> tuple[tuple[float, float], ...]:
        """The pairs (c, α) of the stable terms.

        Returns:
            tuple[tuple[float, float], ...]: A single term (1, α).
        """
        return ((1.0, self.alpha),)


@dataclass(frozen=True)
class StableMixture:
    """A finite mixture f(λ) = Σ c_j λ^{α_j} of stable Bernstein functions.

    Attributes:
        terms (tuple[tuple[float, float], ...]): The pairs (c_j, α_j), c_j > 0, α_j in (0, 1),
        pairwise distinct exponents.
    """

    terms: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        terms = tuple((float(coef), _check_exponent(alpha)) for coef, alpha in self.terms)

        if not terms:
            raise DomainError("a stable mixture needs at least one term")

        for coef, _ in terms:
            if not coef > 0.0 or not math.isfinite(coef):
                raise DomainError(f"the weights of a stable mixture must be positive, got {coef}")

        exponents = [alpha for _, alpha in terms]
        if len(set(exponents)) != len(exponents):
            raise DomainError("the exponents of a stable mixture must be pairwise distinct")

        object.__setattr__(self, "terms", terms)


@dataclass(frozen=True)
class CustomTriplet:
    """A Bernstein function given by the tail of its Lévy measure.

    The killing rate and the drift are carried by the enclosing `BernsteinSpec`.

    Attributes:
        tail (Evaluator): The tail x -> μ̄(x) = μ(x, ∞).
        density (Evaluator, optional): The density m of the Lévy measure, if any.
        m0 (float): The total mass of μ, `inf` when unbounded.
        m1 (float): The first moment of μ, `inf` when unbounded.
        completely_monotone (bool): Asserts that the density is completely monotone.
        exponent (Evaluator, optional): A closed form of λ -> ∫(1 - e^{-λt}) μ(dt), used instead of
        integrating the tail numerically.
    """

    tail: Evaluator
    density: Evaluator = None
    m0: float = math.inf
    m1: float = math.inf
    completely_monotone: bool = False
    exponent: Evaluator = None

    def __post_init__(self) -> None:
        if not callable(self.tail):
            raise DomainError("a custom triplet needs a callable tail")
        if self.density is not None and not callable(self.density):
            raise DomainError("the density of a custom triplet must be callable")
        if self.exponent is not None and not callable(self.exponent):
            raise DomainError("the exponent of a custom triplet must be callable")
        for name in ("m0", "m1"):
            value = float(getattr(self, name))
            if value < 0.0 or math.isnan(value):
                raise DomainError(f"{name} must be a nonnegative extended real, got {value}")
            object.__setattr__(self, name, value)


# The supported families of Bernstein functions.
Family = Union[Stable, StableMixture, CustomTriplet]


@dataclass(frozen=True)
class BernsteinSpec:
    """A Bernstein function f with triplet (a, b, μ).

    The spec is callable: `spec(λ)` evaluates f.

    Attributes:
        family (Family): The description of the Lévy measure.
        a (float): The killing rate, nonnegative.
        b (float): The drift, nonnegative.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable

    spec = BernsteinSpec(Stable(0.5))

    print(spec(4.0))                # 2.0
    print(spec.leading_power())     # (1.0, 0.5)
    ```
    """

    family: Family
    a: float = 0.0
    b: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.family, (Stable, StableMixture, CustomTriplet)):
            raise DomainError(f"unsupported family {self.family!r}")

        for name in ("a", "b"):
            value = float(getattr(self, name))
            if not value >= 0.0 or not math.isfinite(value):
                raise DomainError(f"{name} must be a finite nonnegative real, got {value}")
            object.__setattr__(self, name, value)

        if self.is_closed_form and (self.a != 0.0 or self.b != 0.0):
            raise DomainError("stable families have no killing rate and no drift")

    @property
    def is_closed_form(self) -> bool:
        """Tells if the spec belongs to a closed-form family.

        Returns:
            bool: True for stable functions and stable mixtures.
        """
        return not isinstance(self.family, CustomTriplet)

    @property
    def is_stable(self) -> bool:
        """Tells if the spec is a single stable function.

        Returns:
            bool: True for `Stable` families.
        """
        return isinstance(self.family, Stable)

    @property
    def terms(self) -> tuple[tuple[float, float], ...]:
        """The pairs (c_j, α_j) of a closed-form family.

        Returns:
            tuple[tuple[float, float], ...]: The stable terms, empty for custom triplets.
        """
        if self.is_closed_form:
            return self.family.terms
        return ()

    @property
    def m0(self) -> float:
        """The total mass of the Lévy measure.

        Returns:
            float: The mass, `inf` for the stable families.
        """
        if self.is_closed_form:
            return math.inf
        return self.family.m0

    @property
    def m1(self) -> float:
        """The first moment of the Lévy measure.

        Returns:
            float: The moment, `inf` for the stable families.
        """
        if self.is_closed_form:
            return math.inf
        return self.family.m1

    @property
    def alpha_min(self) -> float:
        """The smallest stable exponent, or the large-λ power of a custom triplet.

        Returns:
            float: The exponent.
        """
        if self.is_closed_form:
            return min(alpha for _, alpha in self.terms)
        return self.leading_power()[1]

    @property
    def alpha_max(self) -> float:
        """The largest stable exponent, or the large-λ power of a custom triplet.

        Returns:
            float: The exponent.
        """
        if self.is_closed_form:
            return max(alpha for _, alpha in self.terms)
        return self.leading_power()[1]

    def leading_power(self) -> tuple[float, float]:
        """Gives (c, β) such that f(λ) ≈ c λ^β as λ → ∞.

        Returns:
            tuple[float, float]: The coefficient and the power.
        """
        if self.is_closed_form:
            return max(self.terms, key=lambda term: term[1])

        low, high = LEADING_POWER_POINTS
        f_low, f_high = self(low), self(high)
        power = math.log(f_high / f_low) / math.log(high / low)
        return f_high / high**power, power

    def tail(self, x: Any) -> float | np.ndarray:
        """Evaluates the tail μ̄(x) = μ(x, ∞).

        Args:
            x (Any): The points, positive.

        Returns:
            float | np.ndarray: The tail values.
        """
        if self.is_closed_form:
            return self.tail_series()(x)
        return self.family.tail(x)

    def density(self, x: Any) -> float | np.ndarray:
        """Evaluates the density m of the Lévy measure.

        Args:
            x (Any): The points, positive.

        Raises:
            DomainError: If a custom triplet has no density.

        Returns:
            float | np.ndarray: The density values.
        """
        if self.is_closed_form:
            return PowerSeries(
                tuple(
                    (coef * alpha / math.gamma(1.0 - alpha), -alpha - 1.0)
                    for coef, alpha in self.terms
                )
            )(x)

        if self.family.density is None:
            raise DomainError("the custom triplet has no density")

        return self.family.density(x)

    def tail_integral(self, x: Any) -> float | np.ndarray:
        """Evaluates M(x) = ∫₀ˣ μ̄(t) dt.

        Args:
            x (Any): The points, nonnegative.

        Returns:
            float | np.ndarray: The integrated tail.
        """
        if self.is_closed_form:
            return self.tail_integral_series()(x)

        points, scalar = as_float_array(x)
        values = np.array(
            [
                integrate.quad(self.family.tail, 0.0, point, limit=200)[0] if point > 0 else 0.0
                for point in points.ravel()
            ]
        ).reshape(points.shape)
        return restore_shape(values, scalar)

    def tail_series(self) -> PowerSeries:
        """The closed form of μ̄ for the stable families.

        Returns:
            PowerSeries: Σ c_j x^{-α_j} / Γ(1 - α_j).
        """
        return PowerSeries(
            tuple((coef / math.gamma(1.0 - alpha), -alpha) for coef, alpha in self.terms)
        )

    def tail_integral_series(self) -> PowerSeries:
        """The closed form of M(x) = ∫₀ˣ μ̄ for the stable families.

        Returns:
            PowerSeries: Σ c_j x^{1-α_j} / Γ(2 - α_j).
        """
        return PowerSeries(
            tuple((coef / math.gamma(2.0 - alpha), 1.0 - alpha) for coef, alpha in self.terms)
        )

    def __call__(self, lam: Any) -> float | np.ndarray:
        """Evaluates f(λ).

        Args:
            lam (Any): The points λ > 0.

        Returns:
            float | np.ndarray: The values of f.
        """
        return evaluate(self, lam)


def evaluate(spec: BernsteinSpec, lam: Any) -> float | np.ndarray:
    """Evaluates the Bernstein function f(λ) = a + bλ + ∫(1 - e^{-λt}) μ(dt).

    Closed-form families give Σ c_j λ^{α_j}. Custom triplets use their closed-form exponent when
    given, otherwise λ times the Laplace transform of the tail, integrated numerically.

    Args:
        spec (BernsteinSpec): The Bernstein function.
        lam (Any): The points λ, positive.

    Raises:
        DomainError: If a point is not positive.

    Returns:
        float | np.ndarray: The values f(λ).

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable, evaluate

    print(evaluate(BernsteinSpec(Stable(0.5)), 2.0)) # 1.4142135623730951
    ```
    """
    points, scalar = as_float_array(lam)

    if np.any(~(points > 0.0)):
        raise DomainError("a Bernstein function is evaluated at positive points only")

    if spec.is_closed_form:
        values = np.zeros_like(points)
        for coef, alpha in spec.terms:
            values = values + coef * np.power(points, alpha)
        return restore_shape(values, scalar)

    if spec.family.exponent is not None:
        jumps = np.asarray(spec.family.exponent(points), dtype=float)
    else:
        jumps = points * np.asarray(transform(spec.family.tail, points), dtype=float)

    return restore_shape(spec.a + spec.b * points + jumps, scalar)
