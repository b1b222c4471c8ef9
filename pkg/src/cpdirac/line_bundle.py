"""Spectrum of the square of the Dirac operator of CP^d twisted by gamma_d^m.

CP^d carries the Fubini-Study metric of holomorphic sectional curvature 4,
``d`` is odd and ``m`` is any integer. Eigenvalues come in three families:

* F1: ``2(r+l)(d+1+2(l-m-eps))`` for ``1 <= r <= d-1``, ``eps in {0, 1}``,
  ``l >= max(eps, (d+1)/2 - r + m)``;
* F2: ``2l(2l+d-1-2m)`` for ``l >= max(0, m + (d+1)/2)``;
* F3: ``2(d+l)(d+1+2(l-m))`` for ``l >= max(0, m - (d+1)/2)``.

Each index corresponds to an irreducible SU(d+1) representation; its
highest weight is returned by :func:`family_highest_weight` and its
dimension (the multiplicity) by :func:`family_multiplicity`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional

from cpdirac.core import (
    Contribution,
    Family,
    FamilyIndex,
    HighestWeight,
    ParameterError,
    Spectrum,
    as_positive_int,
    binomial,
    product,
    rational_reduce,
    require_odd_dimension,
)


def lower_bound(d: int, m: int, family: Family, r: Optional[int] = None, epsilon: int = 0) -> int:
    """Smallest admissible ``l`` for the given strand."""
    h = (d + 1) // 2
    if family is Family.F1:
        return max(epsilon, h - r + m)
    if family is Family.F2:
        return max(0, m + h)
    return max(0, m - h)


def check_index(d: int, m: int, idx: FamilyIndex) -> None:
    """Raise ParameterError naming the violated inequality."""
    require_odd_dimension(d)
    if idx.family is Family.F1:
        if not 1 <= idx.r <= d - 1:
            raise ParameterError(f"F1 requires 1 <= r <= d-1, got r={idx.r}, d={d}")
    lo = lower_bound(d, m, idx.family, idx.r, idx.epsilon or 0)
    if idx.l < lo:
        h = (d + 1) // 2
        rule = {
            Family.F1: f"l >= max(epsilon, {h} - r + m)",
            Family.F2: f"l >= max(0, m + {h})",
            Family.F3: f"l >= max(0, m - {h})",
        }[idx.family]
        raise ParameterError(f"{idx.family.name}: {rule} = {lo} violated by l={idx.l} (d={d}, m={m})")


def _eigen_factors(d: int, m: int, idx: FamilyIndex) -> tuple[int, int]:
    # eigenvalue = first * second; second grows by 2 per unit of l
    l = idx.l
    if idx.family is Family.F1:
        return 2 * (idx.r + l), d + 1 + 2 * (l - m - idx.epsilon)
    if idx.family is Family.F2:
        return 2 * l, 2 * l + d - 1 - 2 * m
    return 2 * (d + l), d + 1 + 2 * (l - m)


def family_eigenvalue(d: int, m: int, idx: FamilyIndex) -> int:
    check_index(d, m, idx)
    a, b = _eigen_factors(d, m, idx)
    value = a * b
    if value < 0:
        raise ParameterError(f"negative eigenvalue {value} for {idx.describe()}")
    return value


def _weyl_type_product(d: int, l: int, shift: int) -> Fraction:
    # shared shape of the F2/F3 closed forms; shift = -(d+1)/2 - m or (d+1)/2 - m
    return (
        product(1 + Fraction(l, k - 1) for k in range(2, d + 1))
        * (1 + Fraction(2 * l + shift, d))
        * product(1 + Fraction(l + shift, d - j + 1) for j in range(2, d + 1))
    )


def multiplicity_fraction(d: int, m: int, idx: FamilyIndex) -> Fraction:
    """Closed-form multiplicity before the integrality check."""
    check_index(d, m, idx)
    h = (d + 1) // 2
    l = idx.l
    if idx.family is Family.F1:
        r, eps = idx.r, idx.epsilon
        prefactor = rational_reduce(
            d * (h + r - m + 2 * l - eps), (r + l) * (h - m + l - eps)
        )
        return (
            prefactor
            * binomial(d + l - eps, d)
            * binomial(d - 1, d - r - eps)
            * binomial((d - 1) // 2 + r - m + l, d)
        )
    shift = -h - m if idx.family is Family.F2 else h - m
    return _weyl_type_product(d, l, shift)


def family_multiplicity(d: int, m: int, idx: FamilyIndex) -> int:
    return as_positive_int(
        multiplicity_fraction(d, m, idx), f"multiplicity of {idx.describe()} (d={d}, m={m})"
    )


def family_highest_weight(d: int, m: int, idx: FamilyIndex) -> HighestWeight:
    check_index(d, m, idx)
    l = idx.l
    if idx.family is Family.F1:
        r, eps = idx.r, idx.epsilon
        upper = r + l - (d - 1) // 2 - m
        lower = r + l - (d + 1) // 2 - m
        return (
            (r + 2 * l - (d - 1) // 2 - m - eps,)
            + (upper,) * (r - 1)
            + (lower + eps,)
            + (lower,) * (d - r - 1)
        )
    tail = l - (d + 1) // 2 - m if idx.family is Family.F2 else l + (d + 1) // 2 - m
    return (l + tail,) + (tail,) * (d - 1)


def strands(d: int) -> Iterator[tuple[Family, Optional[int], Optional[int]]]:
    """All ``(family, r, epsilon)`` strands, in output order."""
    for r in range(1, d):
        for eps in (0, 1):
            yield Family.F1, r, eps
    yield Family.F2, None, None
    yield Family.F3, None, None


def walk_strand(
    d: int,
    m: int,
    family: Family,
    r: Optional[int],
    epsilon: Optional[int],
    cutoff: int,
    s: Optional[int] = None,
) -> Iterator[FamilyIndex]:
    """Indices of one strand whose eigenvalue is ``<= cutoff``.

    Stops once the eigenvalue exceeds the cutoff while its second factor is
    positive: both factors are then nondecreasing in ``l``.
    """
    l = lower_bound(d, m, family, r, epsilon or 0)
    while True:
        idx = FamilyIndex(family, l, r=r, epsilon=epsilon, s=s)
        a, b = _eigen_factors(d, m, idx)
        if a * b > cutoff:
            if b > 0:
                return
        else:
            yield idx
        l += 1


def contribution(d: int, m: int, idx: FamilyIndex) -> Contribution:
    return Contribution(
        index=idx,
        eigenvalue=family_eigenvalue(d, m, idx),
        multiplicity=family_multiplicity(d, m, idx),
        highest_weight=family_highest_weight(d, m, idx),
    )


def enumerate_line_bundle(d: int, m: int, cutoff: int) -> Spectrum:
    """All eigenvalues ``<= cutoff`` of the gamma_d^m-twisted operator, with multiplicities.

    >>> enumerate_line_bundle(1, 0, 16).as_dict()
    {4: 4, 16: 8}
    """
    require_odd_dimension(d)
    if cutoff < 0:
        raise ParameterError(f"cutoff must be >= 0, got {cutoff}")
    found = [
        contribution(d, m, idx)
        for family, r, eps in strands(d)
        for idx in walk_strand(d, m, family, r, eps, cutoff)
    ]
    return Spectrum.aggregate(found, d=d, cutoff=cutoff, m=m)
