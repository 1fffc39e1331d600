"""Exact rational intervals inside [0, 1) and their shortest base-b fractions.

All values are :class:`fractions.Fraction`; nothing here rounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels

BigFraction = Fraction


@dataclass(frozen=True)
class Interval:
    """Half-open interval ``[lo, hi)`` with ``0 <= lo < hi <= 1``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if not 0 <= lo < hi <= 1:
            raise ValueError(f"not a valid sub-interval of [0, 1): [{lo}, {hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def unit(cls) -> Interval:
        return cls(Fraction(0), Fraction(1))

    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        return self.lo <= value < self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi})"


@dataclass(frozen=True)
class DigitString:
    """Fraction written as base-``base`` digits after the radix point."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        digits = tuple(self.digits)
        if any(not 0 <= d < self.base for d in digits):
            raise ValueError(f"digit out of range for base {self.base}")
        object.__setattr__(self, "digits", digits)

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return "".join(map(str, self.digits)) if self.base <= 10 else " ".join(map(str, self.digits))

    def value(self) -> Fraction:
        return digits_to_fraction(self)

    def padded(self, length: int) -> DigitString:
        """Append zeros up to ``length`` digits; the value is unchanged."""
        if length < len(self.digits):
            raise ValueError(f"{len(self.digits)} digits do not fit in {length}")
        return DigitString(self.base, self.digits + (0,) * (length - len(self.digits)))


def _check_p(p):
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    return p


def split_binary(interval: Interval, p) -> tuple[Interval, Interval]:
    """Split into a left part of relative size ``p`` and a right part of size ``1 - p``."""
    p = _check_p(p)
    cut = interval.lo + p * interval.length()
    return Interval(interval.lo, cut), Interval(cut, interval.hi)


def split_qary(interval: Interval, p, q: int) -> list[Interval]:
    """Split into ``q`` contiguous parts.

    The first ``q/2`` parts have relative size ``2p/q`` each and the last
    ``q/2`` have ``2(1-p)/q`` each.
    """
    p = _check_p(p)
    if q < 2 or q % 2:
        raise ValueError(f"q must be even and at least 2, got {q}")
    half = q // 2
    size = interval.length()
    low_step = 2 * p / q * size
    high_step = 2 * (1 - p) / q * size
    edges = [interval.lo + j * low_step for j in range(half + 1)]
    mid = edges[-1]
    edges += [mid + j * high_step for j in range(1, half)]
    edges.append(interval.hi)
    return [Interval(a, b) for a, b in zip(edges, edges[1:])]


def shortest_fraction(interval: Interval, base: int = 2) -> DigitString:
    """Fewest-digit base-``base`` fraction in ``interval``; the leftmost one on ties."""
    if base < 2:
        raise ValueError("base must be at least 2")
    lo, hi = interval.lo, interval.hi
    den = lo.denominator * hi.denominator
    m, k = kernels.shortest_digits(
        lo.numerator * hi.denominator, hi.numerator * lo.denominator, den, base
    )
    return DigitString(base, int_to_digits(m, k, base))


def int_to_digits(m: int, k: int, base: int) -> tuple[int, ...]:
    """The ``k`` base-``base`` digits of ``m``, most significant first."""
    out = [0] * k
    for j in range(k - 1, -1, -1):
        m, out[j] = divmod(m, base)
    if m:
        raise ValueError("value does not fit in the requested number of digits")
    return tuple(out)


def digits_to_int(digits: Sequence[int], base: int) -> int:
    m = 0
    for d in digits:
        m = m * base + d
    return m


def digits_to_fraction(digits: DigitString) -> Fraction:
    """Exact value of ``0.d1 d2 d3 ...`` in base ``digits.base``."""
    return Fraction(digits_to_int(digits.digits, digits.base), digits.base ** len(digits.digits))
