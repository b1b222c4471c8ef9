"""Exact arithmetic helpers and the domain types shared by every module."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional


class ParameterError(ValueError):
    """An input violates a stated constraint (bad d, n, l, r, ...)."""


class ConsistencyError(ArithmeticError):
    """An internal identity failed, e.g. a multiplicity did not reduce to an integer."""


def binomial(top: int, k: int) -> int:
    """Binomial coefficient ``C(top, k)``; zero when ``k`` is outside ``[0, top]``.

    A negative ``top`` only arises from a violated family constraint, so it
    is rejected instead of being extended to negative arguments.
    """
    if top < 0:
        raise ParameterError(f"binomial top must be >= 0, got C({top}, {k})")
    if k < 0 or k > top:
        return 0
    return math.comb(top, k)


def rational_reduce(p: int, q: int) -> Fraction:
    if q == 0:
        raise ZeroDivisionError(f"rational {p}/0")
    return Fraction(p, q)


def as_positive_int(value: Fraction | int, what: str) -> int:
    """Return ``value`` as an ``int`` or raise if it is not a positive integer."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ConsistencyError(f"{what} is not integral: {value}")
    if value <= 0:
        raise ConsistencyError(f"{what} is not positive: {value}")
    return value.numerator


def product(factors: Iterable[Fraction | int]) -> Fraction:
    # empty product is 1
    out = Fraction(1)
    for f in factors:
        out *= f
    return out


def require_odd_dimension(d: int, name: str = "d") -> None:
    if not isinstance(d, int) or isinstance(d, bool):
        raise ParameterError(f"{name} must be an integer")
    if d < 1:
        raise ParameterError(f"{name} must be positive, got {d}")
    if d % 2 == 0:
        raise ParameterError(f"{name} must be odd, got {d}")


@dataclass(frozen=True)
class EmbeddingParams:
    """Odd complex dimensions ``d < n`` of the embedding CP^d -> CP^n."""

    d: int
    n: int

    def __post_init__(self) -> None:
        require_odd_dimension(self.d, "d")
        require_odd_dimension(self.n, "n")
        if self.d >= self.n:
            raise ParameterError(f"d must be smaller than n, got d={self.d}, n={self.n}")

    @property
    def codim(self) -> int:
        """Complex codimension ``n - d`` (always even and >= 2)."""
        return self.n - self.d

    @property
    def half_codim(self) -> int:
        return (self.n - self.d) // 2

    def twist(self, s: int) -> int:
        """Power of the tautological bundle carried by the ``s``-th normal summand."""
        return self.half_codim - s


class Family(enum.IntEnum):
    F1 = 1
    F2 = 2
    F3 = 3


@dataclass(frozen=True, order=True)
class FamilyIndex:
    """Labels one eigenvalue contribution.

    ``r`` and ``epsilon`` are only set for ``F1``; ``s`` is only set when the
    contribution comes from the normal spinor bundle, in which case the twist
    power is ``(n - d)/2 - s``.
    """

    family: Family
    l: int
    r: Optional[int] = None
    epsilon: Optional[int] = None
    s: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.F1:
            if self.r is None or self.epsilon is None:
                raise ParameterError("F1 index needs r and epsilon")
            if self.epsilon not in (0, 1):
                raise ParameterError(f"epsilon must be 0 or 1, got {self.epsilon}")
        elif self.r is not None or self.epsilon is not None:
            raise ParameterError(f"{self.family.name} index takes no r/epsilon")
        if self.l < 0:
            raise ParameterError(f"l must be >= 0, got {self.l}")

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (
            int(self.family),
            -1 if self.s is None else self.s,
            self.r or 0,
            self.epsilon or 0,
            self.l,
        )

    def describe(self) -> str:
        parts = [self.family.name]
        if self.r is not None:
            parts.append(f"r={self.r}")
        if self.s is not None:
            parts.append(f"s={self.s}")
        if self.epsilon is not None:
            parts.append(f"epsilon={self.epsilon}")
        parts.append(f"l={self.l}")
        return " ".join(parts)


HighestWeight = tuple[int, ...]


@dataclass(frozen=True)
class Contribution:
    index: FamilyIndex
    eigenvalue: int
    multiplicity: int
    highest_weight: HighestWeight


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: int
    multiplicity: int
    contributions: tuple[Contribution, ...]

    def __post_init__(self) -> None:
        total = sum(c.multiplicity for c in self.contributions)
        if total != self.multiplicity:
            raise ConsistencyError(
                f"entry {self.eigenvalue}: multiplicity {self.multiplicity} != sum {total}"
            )


@dataclass(frozen=True)
class Spectrum:
    """Aggregated spectrum of a squared twisted Dirac operator up to ``cutoff``.

    Exactly one of ``m`` (line bundle twist) or ``n`` (normal spinor twist)
    is set.
    """

    d: int
    cutoff: int
    entries: tuple[SpectrumEntry, ...]
    m: Optional[int] = None
    n: Optional[int] = None

    @classmethod
    def aggregate(
        cls,
        contributions: Iterable[Contribution],
        *,
        d: int,
        cutoff: int,
        m: Optional[int] = None,
        n: Optional[int] = None,
    ) -> "Spectrum":
        buckets: dict[int, list[Contribution]] = {}
        for c in contributions:
            if c.eigenvalue > cutoff:
                continue
            buckets.setdefault(c.eigenvalue, []).append(c)
        entries = []
        for eig in sorted(buckets):
            parts = sorted(buckets[eig], key=lambda c: c.index.sort_key())
            entries.append(
                SpectrumEntry(eig, sum(c.multiplicity for c in parts), tuple(parts))
            )
        return cls(d=d, cutoff=cutoff, entries=tuple(entries), m=m, n=n)

    def as_dict(self) -> dict[int, int]:
        return {e.eigenvalue: e.multiplicity for e in self.entries}

    @property
    def eigenvalues(self) -> list[int]:
        return [e.eigenvalue for e in self.entries]

    def multiplicity(self, eigenvalue: int) -> int:
        for e in self.entries:
            if e.eigenvalue == eigenvalue:
                return e.multiplicity
        return 0

    def lowest(self) -> Optional[int]:
        return self.entries[0].eigenvalue if self.entries else None

    def cumulative(self, upto: int, *, strict: bool = False) -> int:
        """Total multiplicity of eigenvalues ``<= upto`` (``< upto`` if strict)."""
        return sum(
            e.multiplicity
            for e in self.entries
            if e.eigenvalue < upto or (not strict and e.eigenvalue == upto)
        )

    def contributions(self) -> list[Contribution]:
        return [c for e in self.entries for c in e.contributions]
