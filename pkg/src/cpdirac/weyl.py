"""SU(d+1) root data in theta-coordinates and the Weyl dimension formula.

Weights are integer vectors of length ``d`` giving coefficients in the
basis ``theta_1, ..., theta_d``. The invariant inner product on the dual of
the maximal torus is ``<u, v> = u . beta . v^T`` with

    beta_jk = 2/(d+1) * (-1 + (d+1) * delta_jk).

This module is used as an independent check on the closed-form
multiplicities in :mod:`cpdirac.line_bundle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from cpdirac.core import ConsistencyError, ParameterError, as_positive_int

WeightVector = tuple[int, ...]


@dataclass(frozen=True)
class RootSystem:
    d: int
    positive_roots: tuple[WeightVector, ...]
    delta_plus: WeightVector


def _check_rank(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise ParameterError(f"rank d must be a positive integer, got {d!r}")


@lru_cache(maxsize=None)
def root_system(d: int) -> RootSystem:
    """Positive roots ``theta_j - theta_k`` (j < k) and ``theta_j + sum_k theta_k``.

    >>> root_system(2).positive_roots
    ((1, -1), (2, 1), (1, 2))
    """
    _check_rank(d)
    roots: list[WeightVector] = []
    for j in range(d):
        for k in range(j + 1, d):
            v = [0] * d
            v[j], v[k] = 1, -1
            roots.append(tuple(v))
    for j in range(d):
        v = [1] * d
        v[j] += 1
        roots.append(tuple(v))
    delta = tuple(d - k for k in range(d))
    return RootSystem(d=d, positive_roots=tuple(roots), delta_plus=delta)


def inner(d: int, u: Sequence[int], v: Sequence[int]) -> Fraction:
    _check_rank(d)
    if len(u) != d or len(v) != d:
        raise ParameterError(f"weights must have length {d}, got {len(u)} and {len(v)}")
    # u.beta.v = 2/(d+1) * ((d+1) u.v - sum(u) sum(v))
    dot = sum(a * b for a, b in zip(u, v))
    return Fraction(2 * ((d + 1) * dot - sum(u) * sum(v)), d + 1)


def weyl_dim_fraction(d: int, weight: Sequence[int]) -> Fraction:
    """The Weyl product without the integrality gate."""
    rs = root_system(d)
    if len(weight) != d:
        raise ParameterError(f"weight must have length {d}, got {len(weight)}")
    out = Fraction(1)
    for alpha in rs.positive_roots:
        out *= 1 + inner(d, weight, alpha) / inner(d, rs.delta_plus, alpha)
    return out


def weyl_dim(d: int, weight: Sequence[int]) -> int:
    """Dimension of the SU(d+1) irreducible representation with this highest weight.

    Raises ConsistencyError when the product is not a positive integer, which
    means the weight is not an admissible highest weight.
    """
    value = weyl_dim_fraction(d, weight)
    try:
        return as_positive_int(value, f"weyl_dim{tuple(weight)}")
    except ConsistencyError:
        raise ConsistencyError(f"inadmissible weight {tuple(weight)}: Weyl product {value}")
