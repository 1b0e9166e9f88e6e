"""The result of a truncated series."""
from __future__ import annotations

import math
from dataclasses import dataclass

from cerbernetix.bernstein.operators.grid import GridFunction


@dataclass(frozen=True)
class SeriesSolution:
    """A partial sum of a series together with its certificates.

    Attributes:
        solution (GridFunction): The partial sum.
        terms_used (int): The index of the last term added.
        tail_bound (float): The bound on the neglected tail, or on the last added term for the
        series certified by their decay.
        residual (float): The largest deviation of the defining equation at the interior nodes.
        contraction (float): The contraction constant used by the certificate, NaN if none.
    """

    solution: GridFunction
    terms_used: int
    tail_bound: float
    residual: float
    contraction: float = math.nan

    def summary(self) -> dict:
        """Gives the certificates as a flat record.

        Returns:
            dict: The terms used, the tail bound, the residual and the contraction constant.
        """
        return {
            "terms_used": self.terms_used,
            "tail_bound": self.tail_bound,
            "residual": self.residual,
            "contraction": self.contraction,
        }
