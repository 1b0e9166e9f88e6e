"""The models of Bernstein functions.

It contains:
- `BernsteinSpec`: A Bernstein function given by its family, killing rate and drift.
- `Stable`, `StableMixture`, `CustomTriplet`: The supported families.
- `PowerSeries`: A closed-form sum of power functions.
- `evaluate(spec, lam)`: Evaluates f(λ).
- `conjugate_eval(spec, lam)`: Evaluates the conjugate λ/f(λ).
- `conjugate(spec)`: Builds the conjugate Bernstein function.
- `check_assumptions(spec)`: Checks if a Bernstein function is admissible.
- `classify_conjugate(a, b, m0, m1)`: Classifies a triplet and gives the conjugate rates.
- `classify_spec(spec)`: Classifies the triplet of a spec.
- `yosida_approx(spec, n)`: Builds a Yosida approximant.

Examples:
```python
from cerbernetix.bernstein.core import (
    BernsteinSpec,
    Stable,
    check_assumptions,
    conjugate_eval,
    evaluate,
)

spec = BernsteinSpec(Stable(0.5))

print(evaluate(spec, 4.0))          # 2.0
print(conjugate_eval(spec, 4.0))    # 2.0
print(check_assumptions(spec).a1_pass) # True
```
"""
from cerbernetix.bernstein.core.assumptions import (
    AssumptionReport,
    check_assumptions,
    estimate_limit,
)
from cerbernetix.bernstein.core.conjugate import (
    ConjugateClassification,
    ConjugateExponent,
    PotentialDensity,
    classify_conjugate,
    classify_spec,
    conjugate,
    conjugate_eval,
)
from cerbernetix.bernstein.core.evaluators import (
    Evaluator,
    PowerSeries,
    as_float_array,
    restore_shape,
)
from cerbernetix.bernstein.core.families import (
    BernsteinSpec,
    CustomTriplet,
    Family,
    Stable,
    StableMixture,
    evaluate,
)
from cerbernetix.bernstein.core.yosida import YosidaApproximant, yosida_approx
