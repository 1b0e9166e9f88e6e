"""Sonine pairs (μ̄, k) built from Bernstein functions.

The tail μ̄ of the Lévy measure of f and the potential density k, whose Laplace transform is 1/f,
satisfy μ̄ ∗ k ≡ 1. Stable functions have closed forms. For other functions, k is obtained by
numerical Laplace inversion and its integrals by quadrature with the leading singularity removed.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.sonine import build_pair

pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
print(pair.K(1.0))      # 1.1283791670955126
print(pair.provenance)  # Provenance.ANALYTIC
```
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from cerbernetix.bernstein.core import (
    BernsteinSpec,
    Evaluator,
    PotentialDensity,
    PowerSeries,
    check_assumptions,
    yosida_approx,
)
from cerbernetix.bernstein.errors import DomainError, NotAdmissibleError
from cerbernetix.bernstein.laplace import DEFAULT_TERMS, TransformEvaluator, invert
from cerbernetix.bernstein.sonine.quadrature import CumulativeIntegral

logger = logging.getLogger(__name__)


class Provenance(Enum):
    """How the kernel k of a pair is obtained."""

    ANALYTIC = "analytic"
    INVERTED = "inverted"


@dataclass(frozen=True, eq=False)
class LevyTail:
    """The tail of a Lévy measure and its integral, as used by the derivative operators.

    Attributes:
        mu_bar (Evaluator): The tail x ↦ μ̄(x).
        mu_bar_integral (Evaluator): The integral x ↦ ∫₀ˣ μ̄.
        horizon (float): The horizon T of the operators.
    """

    mu_bar: Evaluator
    mu_bar_integral: Evaluator
    horizon: float


# pylint: disable=invalid-name
@dataclass(frozen=True, eq=False)
class SoninePair:
    """A positive Sonine pair (μ̄, k) and the integrals used by the operators.

    Attributes:
        spec (BernsteinSpec): The Bernstein function f.
        mu_bar (Evaluator): The tail μ̄ of the Lévy measure of f.
        mu_bar_integral (Evaluator): x ↦ ∫₀ˣ μ̄.
        k (Evaluator): The potential density, with Laplace transform 1/f.
        K (Evaluator): x ↦ ∫₀ˣ k.
        K_integral (Evaluator): x ↦ ∫₀ˣ K.
        exponent (float): The power β with μ̄(x) ~ x^{-β} and k(x) ~ x^{β-1} at 0.
        provenance (Provenance): Whether k is analytic or inverted.
        horizon (float): The horizon T; the evaluators are trusted on (0, 2T].
    """

    spec: BernsteinSpec
    mu_bar: Evaluator
    mu_bar_integral: Evaluator
    k: Evaluator
    K: Evaluator
    K_integral: Evaluator
    exponent: float
    provenance: Provenance
    horizon: float

    @cached_property
    def levy_tail(self) -> LevyTail:
        """The tail used by the derivative operators.

        Returns:
            LevyTail: The tail μ̄, its integral and the horizon.
        """
        return LevyTail(self.mu_bar, self.mu_bar_integral, self.horizon)


# pylint: enable=invalid-name


def _check_horizon(horizon: float) -> float:
    horizon = float(horizon)
    if not 0.0 < horizon < math.inf:
        raise DomainError(f"the horizon must be a finite positive real, got {horizon}")
    return horizon


def _stable_pair(spec: BernsteinSpec, horizon: float) -> SoninePair:
    alpha = spec.family.alpha
    return SoninePair(
        spec=spec,
        mu_bar=PowerSeries(((1.0 / math.gamma(1.0 - alpha), -alpha),)),
        mu_bar_integral=PowerSeries(((1.0 / math.gamma(2.0 - alpha), 1.0 - alpha),)),
        k=PowerSeries(((1.0 / math.gamma(alpha), alpha - 1.0),)),
        K=PowerSeries(((1.0 / math.gamma(1.0 + alpha), alpha),)),
        K_integral=PowerSeries(((1.0 / math.gamma(2.0 + alpha), 1.0 + alpha),)),
        exponent=alpha,
        provenance=Provenance.ANALYTIC,
        horizon=horizon,
    )


def _inverted_pair(spec: BernsteinSpec, horizon: float, terms: int) -> SoninePair:
    coef, power = spec.leading_power()
    kernel_coef = 1.0 / (coef * math.gamma(power))

    if spec.is_closed_form:
        mu_bar = spec.tail_series()
        mu_bar_integral = spec.tail_integral_series()
    else:
        mu_bar = spec.family.tail
        mu_bar_integral = CumulativeIntegral(
            mu_bar, coef / math.gamma(1.0 - power), -power, horizon
        )

    k = PotentialDensity(spec, terms=terms)
    K = CumulativeIntegral(k, kernel_coef, power - 1.0, horizon)  # pylint: disable=invalid-name

    return SoninePair(
        spec=spec,
        mu_bar=mu_bar,
        mu_bar_integral=mu_bar_integral,
        k=k,
        K=K,
        K_integral=CumulativeIntegral(K, kernel_coef / power, power, horizon),
        exponent=power,
        provenance=Provenance.INVERTED,
        horizon=horizon,
    )


def build_pair(spec: BernsteinSpec, horizon: float, terms: int = DEFAULT_TERMS) -> SoninePair:
    """Builds the Sonine pair of an admissible Bernstein function.

    Args:
        spec (BernsteinSpec): The Bernstein function.
        horizon (float): The horizon T.
        terms (int, optional): The number of Gaver-Stehfest terms used to invert 1/f. Defaults
        to 14.

    Raises:
        DomainError: If the horizon is not a finite positive real.
        NotAdmissibleError: If the Bernstein function fails the assumption checks.
        InversionUnstableError: If the inversion of 1/f fails.

    Returns:
        SoninePair: The pair, analytic for stable functions, inverted otherwise.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, StableMixture
    from cerbernetix.bernstein.sonine import build_pair

    pair = build_pair(BernsteinSpec(StableMixture(((1.0, 0.3), (1.0, 0.7)))), 2.0)
    print(pair.k(0.5))
    ```
    """
    horizon = _check_horizon(horizon)
    report = check_assumptions(spec)

    if not report.admissible:
        raise NotAdmissibleError(f"the Bernstein function is not admissible: {report.notes}")

    if spec.is_stable:
        pair = _stable_pair(spec, horizon)
    else:
        pair = _inverted_pair(spec, horizon, terms)

    logger.info(
        "Built a %s Sonine pair with exponent %g on [0, %g]",
        pair.provenance.value,
        pair.exponent,
        horizon,
    )
    return pair


@dataclass(frozen=True)
class _YosidaTransform:
    # λ ↦ f_n(λ) / λ, the transform of the tail of f_n
    approximant: Evaluator

    def __call__(self, lam):
        return self.approximant(lam) / lam


def yosida_tail(
    spec: BernsteinSpec, n: int, horizon: float, terms: int = DEFAULT_TERMS
) -> LevyTail:
    """Builds the tail of the Lévy measure of the Yosida approximant f_n.

    The measure of f_n has total mass n, so its tail is bounded by n and its integral has no
    singular part.

    Args:
        spec (BernsteinSpec): The Bernstein function f.
        n (int): The index of the approximant.
        horizon (float): The horizon T.
        terms (int, optional): The number of Gaver-Stehfest terms. Defaults to 14.

    Returns:
        LevyTail: The tail μ̄_n and its integral.
    """
    horizon = _check_horizon(horizon)
    transform = TransformEvaluator(_YosidaTransform(yosida_approx(spec, n)))

    def mu_bar(x):
        return invert(transform, x, terms=terms)

    return LevyTail(mu_bar, CumulativeIntegral(mu_bar, 0.0, 0.0, horizon), horizon)
