"""Dirac operator of CP^d twisted by the normal spinor bundle of CP^d -> CP^n.

The normal spinor bundle splits as ``sum_s C(n-d, s) gamma_d^((n-d)/2 - s)``
for ``s = 0..n-d``. :func:`enumerate_normal` evaluates the resulting
eigenvalue/multiplicity formulas written in terms of ``(d, n, s)`` directly;
:func:`merge_line_bundles` rebuilds the same spectrum by weighting the
line-bundle spectra, and is kept as a cross-check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from cpdirac.core import (
    Contribution,
    EmbeddingParams,
    Family,
    FamilyIndex,
    ParameterError,
    Spectrum,
    as_positive_int,
    binomial,
    product,
    rational_reduce,
)
from cpdirac.line_bundle import enumerate_line_bundle, family_highest_weight, strands

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecompositionTerm:
    power: int
    multiplicity: int


def decompose_normal_spinor(params: EmbeddingParams) -> list[DecompositionTerm]:
    """Line-bundle summands of the normal spinor bundle, powers descending."""
    k = params.codim
    return [DecompositionTerm(params.twist(s), binomial(k, s)) for s in range(k + 1)]


def _lower_bound(params: EmbeddingParams, family: Family, r, epsilon, s: int) -> int:
    d, n = params.d, params.n
    if family is Family.F1:
        return max(epsilon, (n + 1) // 2 - r - s)
    if family is Family.F2:
        return max(0, (n + 1) // 2 - s)
    return max(0, (n - 1) // 2 - d - s)


def _factors(params: EmbeddingParams, idx: FamilyIndex) -> tuple[int, int]:
    d, n, s, l = params.d, params.n, idx.s, idx.l
    if idx.family is Family.F1:
        return 2 * (idx.r + l), 2 * d + 1 - n + 2 * (s + l - idx.epsilon)
    if idx.family is Family.F2:
        return 4 * l, l + s + d - (n + 1) // 2
    return 2 * (d + l), 2 * d - n + 1 + 2 * (l + s)


def normal_eigenvalue(params: EmbeddingParams, idx: FamilyIndex) -> int:
    a, b = _factors(params, idx)
    return a * b


def normal_multiplicity_fraction(params: EmbeddingParams, idx: FamilyIndex) -> Fraction:
    d, n, s, l = params.d, params.n, idx.s, idx.l
    weight = binomial(n - d, s)
    if idx.family is Family.F1:
        r, eps = idx.r, idx.epsilon
        prefactor = rational_reduce(
            d * (d - (n - 1) // 2 + r + s + 2 * l - eps),
            (r + l) * (d - (n - 1) // 2 + s + l - eps),
        )
        return (
            prefactor
            * weight
            * binomial(d + l - eps, d)
            * binomial(d - 1, d - r - eps)
            * binomial(d - (n + 1) // 2 + r + s + l, d)
        )
    if idx.family is Family.F2:
        shift = s - (n + 1) // 2
    else:
        shift = d - (n - 1) // 2 + s
    return (
        weight
        * product(1 + Fraction(l, k - 1) for k in range(2, d + 1))
        * (1 + Fraction(2 * l + shift, d))
        * product(1 + Fraction(l + shift, d - j + 1) for j in range(2, d + 1))
    )


def _walk(params: EmbeddingParams, family: Family, r, epsilon, s: int, cutoff: int):
    l = _lower_bound(params, family, r, epsilon, s)
    while True:
        idx = FamilyIndex(family, l, r=r, epsilon=epsilon, s=s)
        a, b = _factors(params, idx)
        if a * b > cutoff:
            if b > 0:
                return
        else:
            yield idx
        l += 1


def normal_contributions(params: EmbeddingParams, cutoff: int) -> list[Contribution]:
    out = []
    for s in range(params.codim + 1):
        for family, r, eps in strands(params.d):
            for idx in _walk(params, family, r, eps, s, cutoff):
                eig = normal_eigenvalue(params, idx)
                if eig < 0:
                    raise ParameterError(f"negative eigenvalue {eig} at {idx.describe()}")
                mult = as_positive_int(
                    normal_multiplicity_fraction(params, idx),
                    f"multiplicity of {idx.describe()} (d={params.d}, n={params.n})",
                )
                hw = family_highest_weight(params.d, params.twist(s), idx)
                out.append(Contribution(idx, eig, mult, hw))
    return out


def enumerate_normal(params: EmbeddingParams, cutoff: int) -> Spectrum:
    """Eigenvalues ``<= cutoff`` of the square of the normal-spinor-twisted Dirac operator.

    >>> enumerate_normal(EmbeddingParams(1, 3), 4).as_dict()
    {0: 2, 4: 8}
    """
    if cutoff < 0:
        raise ParameterError(f"cutoff must be >= 0, got {cutoff}")
    found = normal_contributions(params, cutoff)
    if log.isEnabledFor(logging.DEBUG):
        for family in Family:
            values = [c.eigenvalue for c in found if c.index.family is family]
            log.debug(
                "d=%d n=%d %s minimum below %d: %s",
                params.d, params.n, family.name, cutoff, min(values) if values else None,
            )
    return Spectrum.aggregate(found, d=params.d, cutoff=cutoff, n=params.n)


def merge_line_bundles(params: EmbeddingParams, cutoff: int) -> Spectrum:
    """Weight each line-bundle spectrum by its summand multiplicity and merge."""
    found = []
    for s, term in enumerate(decompose_normal_spinor(params)):
        part = enumerate_line_bundle(params.d, term.power, cutoff)
        for c in part.contributions():
            idx = FamilyIndex(c.index.family, c.index.l, r=c.index.r, epsilon=c.index.epsilon, s=s)
            found.append(
                Contribution(idx, c.eigenvalue, c.multiplicity * term.multiplicity, c.highest_weight)
            )
    return Spectrum.aggregate(found, d=params.d, cutoff=cutoff, n=params.n)


def lowest_eigenvalue(params: EmbeddingParams) -> int:
    d, n = params.d, params.n
    if 2 * d < n + 1:
        return 0
    return (n + 1) * (2 * d + 1 - n)
