"""Upper and Kirchberg-type lower eigenvalue bounds, and the sharpness check.

All spectral values are eigenvalues of the *squared* twisted Dirac operator.
``alpha_sq`` is the Killing number squared; ``alpha_sq = 1`` corresponds to
the Fubini-Study metric of holomorphic sectional curvature 4 used for the
computed spectra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from cpdirac.core import EmbeddingParams, ParameterError, binomial
from cpdirac.normal import enumerate_normal, lowest_eigenvalue


class Verdict(enum.Enum):
    SHARP = "Sharp"
    NOT_SHARP = "NotSharp"


def upper_bound(d: int, alpha_sq: Fraction | int = 1) -> Fraction:
    """Bound satisfied by ``mu`` eigenvalues when ``mu`` Kahlerian Killing spinors exist."""
    if d < 1:
        raise ParameterError(f"d must be positive, got {d}")
    alpha_sq = Fraction(alpha_sq)
    if d % 2:
        return (d + 1) ** 2 * alpha_sq
    return d * (d + 2) * alpha_sq


def killing_spinor_count(n: int) -> int:
    """Dimension ``2 C(n, (n+1)/2)`` of Kahlerian Killing spinors on CP^n, n odd."""
    if n < 3 or n % 2 == 0:
        raise ParameterError(f"n must be odd and >= 3, got {n}")
    return 2 * binomial(n, (n + 1) // 2)


def scalar_curvature(d: int, alpha_sq: Fraction | int = 1) -> Fraction:
    """Scalar curvature ``4d(d+1) alpha^2`` of CP^d."""
    return 4 * d * (d + 1) * Fraction(alpha_sq)


def re_spectrum_totally_geodesic(params: EmbeddingParams) -> tuple[list[int], int]:
    """Eigenvalues of the twisting curvature term for a totally geodesic CP^d.

    With vanishing second fundamental form the term is ``-4 Omega . Omega_N``,
    acting on ``Sigma_r M (x) Sigma_s N`` by ``4(2r-d)(2s-(n-d))``. Returns the
    sorted list over ``0 <= r <= d``, ``0 <= s <= n-d`` (one value per pair)
    and its minimum ``kappa_1``.
    """
    d, k = params.d, params.codim
    values = sorted(4 * (2 * r - d) * (2 * s - k) for r in range(d + 1) for s in range(k + 1))
    return values, values[0]


def kirchberg_lower_bound(
    d: int, scal0: Fraction | int, kappa1: Fraction | int, branch: Optional[str] = None
) -> Fraction:
    """Lower bound on eigenvalues of the squared operator.

    ``(d+1)/(4d) (scal0 + kappa1)`` for odd ``d`` and ``d/(4(d-1)) (...)`` for
    even ``d``. ``branch`` forces ``"odd"`` or ``"even"``; by default it
    follows the parity of ``d``.
    """
    if d < 1:
        raise ParameterError(f"d must be positive, got {d}")
    branch = branch or ("odd" if d % 2 else "even")
    bracket = Fraction(scal0) + Fraction(kappa1)
    if branch == "odd":
        return Fraction(d + 1, 4 * d) * bracket
    if branch == "even":
        if d < 2:
            raise ParameterError("even branch needs d >= 2")
        return Fraction(d, 4 * (d - 1)) * bracket
    raise ParameterError(f"branch must be 'odd' or 'even', got {branch!r}")


def type_rr1_bounds(
    d: int, r: int, scal0: Fraction | int, kappa1: Fraction | int
) -> tuple[Fraction, Fraction]:
    """The two bounds for an eigenspinor of type ``(r, r+1)``.

    Uses ``a_r = 1/(2(r+1))`` and ``b_{r+1} = 1/(2(d-r))``, i.e. the
    dimension parameter in ``b`` is taken to be the complex dimension ``d``.
    The curvature infimum is ``scal0 + kappa1``, which is exact when both are
    constant.
    """
    if not 0 <= r <= d - 1:
        raise ParameterError(f"r must satisfy 0 <= r <= d-1, got r={r}, d={d}")
    bracket = Fraction(scal0) + Fraction(kappa1)
    a_r = Fraction(1, 2 * (r + 1))
    b_next = Fraction(1, 2 * (d - r))
    return bracket / (4 * (1 - a_r)), bracket / (4 * (1 - b_next))


@dataclass(frozen=True)
class BoundsReport:
    params: EmbeddingParams
    alpha_sq: Fraction
    upper_bound: Fraction
    mu: int
    scal0: Fraction
    kappa1: Fraction
    kirchberg_bound: Fraction
    lowest: Fraction


def bounds_report(params: EmbeddingParams, alpha_sq: Fraction | int = 1) -> BoundsReport:
    """Collect upper bound, Killing spinor count and the lower bound for CP^d in CP^n.

    Every curvature quantity and the spectrum scale linearly with ``alpha_sq``.
    """
    alpha_sq = Fraction(alpha_sq)
    if alpha_sq <= 0:
        raise ParameterError(f"alpha_sq must be positive, got {alpha_sq}")
    scal0 = scalar_curvature(params.d, alpha_sq)
    _, kappa1 = re_spectrum_totally_geodesic(params)
    kappa1 = kappa1 * alpha_sq
    lower = kirchberg_lower_bound(params.d, scal0, kappa1)
    lowest = lowest_eigenvalue(params) * alpha_sq
    if lower > lowest:
        raise ArithmeticError(f"lower bound {lower} exceeds lowest eigenvalue {lowest}")
    return BoundsReport(
        params=params,
        alpha_sq=alpha_sq,
        upper_bound=upper_bound(params.d, alpha_sq),
        mu=killing_spinor_count(params.n),
        scal0=scal0,
        kappa1=kappa1,
        kirchberg_bound=lower,
        lowest=lowest,
    )


@dataclass(frozen=True)
class SharpnessReport:
    params: EmbeddingParams
    bound: int
    mu: int
    mult_zero: int
    mult_bound: int
    cumulative_below: int
    verdict: Verdict

    @property
    def strictly_below(self) -> int:
        return self.cumulative_below - self.mult_bound


def sharpness_report(params: EmbeddingParams) -> SharpnessReport:
    """Decide whether the upper bound can be attained by the ``mu``-th eigenvalue.

    The bound is sharp iff fewer than ``mu`` eigenvalues (with multiplicity)
    lie strictly below it. For ``d = 1`` the multiplicities of 0 and 4 have
    closed forms; otherwise they are read from the enumerated spectrum.
    """
    d, n = params.d, params.n
    bound = int(upper_bound(d))
    mu = killing_spinor_count(n)
    if d == 1:
        mult_zero = (n - 1) // 2 * binomial(n - 1, (n - 1) // 2)
        mult_bound = 4 * binomial(n - 1, (n - 1) // 2)
        cumulative = mult_zero + mult_bound
    else:
        spectrum = enumerate_normal(params, bound)
        mult_zero = spectrum.multiplicity(0)
        mult_bound = spectrum.multiplicity(bound)
        cumulative = spectrum.cumulative(bound)
    below = cumulative - mult_bound
    return SharpnessReport(
        params=params,
        bound=bound,
        mu=mu,
        mult_zero=mult_zero,
        mult_bound=mult_bound,
        cumulative_below=cumulative,
        verdict=Verdict.SHARP if below < mu else Verdict.NOT_SHARP,
    )
