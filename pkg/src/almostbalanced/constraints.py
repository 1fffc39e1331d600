"""Membership tests for the almost-balanced constraint sets.

A band ``|v - n/c| <= s * alpha * sqrt(n)`` is decided by squaring both sides,
so thresholds such as ``n/2 - sqrt(8)`` are resolved exactly with integers.
Bands are closed.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SymbolSequence:
    """A sequence over ``{0, ..., q-1}``."""

    q: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet size must be at least 2")
        symbols = tuple(self.symbols)
        for s in symbols:
            if not 0 <= s < self.q:
                raise ValueError(f"symbol {s} outside alphabet of size {self.q}")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def parse(cls, text: str, q: int) -> SymbolSequence:
        """Read a string of decimal digits such as ``"0123"``."""
        if q > 10:
            raise ValueError("text form supports alphabets of at most 10 symbols")
        if not text.isdigit() and text:
            raise ValueError(f"non-digit character in {text!r}")
        return cls(q, tuple(int(ch) for ch in text))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, item):
        return self.symbols[item]

    def __str__(self):
        return "".join(map(str, self.symbols))


@dataclass(frozen=True)
class BalanceSpec:
    n: int
    q: int
    alpha_sq: Fraction

    def __post_init__(self):
        alpha_sq = Fraction(self.alpha_sq)
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.q < 2:
            raise ValueError("q must be at least 2")
        if alpha_sq <= 0:
            raise ValueError("alpha^2 must be positive")
        object.__setattr__(self, "alpha_sq", alpha_sq)


def in_band(v: int, n: int, center: int, alpha_sq, scale=1, side: str = "both") -> bool:
    """Is ``v`` within ``scale * alpha * sqrt(n)`` of ``n / center``?

    ``side="low"`` only checks the upper edge (``v <= n/c + s*alpha*sqrt(n)``),
    ``side="high"`` only the lower edge.
    """
    if side not in ("both", "low", "high"):
        raise ValueError(f"unknown side {side!r}")
    dev = center * v - n
    if side == "low" and dev <= 0:
        return True
    if side == "high" and dev >= 0:
        return True
    radius = Fraction(scale) ** 2 * Fraction(alpha_sq)
    # (c v - n)^2 <= c^2 s^2 alpha^2 n
    return dev * dev * radius.denominator <= center * center * radius.numerator * n


def band_limits(n: int, center: int, alpha_sq, scale=1) -> tuple[int, int] | None:
    """Smallest and largest integer in ``[0, n]`` inside the band, or None."""
    radius = Fraction(scale) ** 2 * Fraction(alpha_sq)
    # |c v - n| is an integer, so it may be compared with the floored root
    reach = isqrt(center * center * radius.numerator * n // radius.denominator)
    lo = max(0, -((reach - n) // center))
    hi = min(n, (n + reach) // center)
    if lo > hi:
        return None
    return lo, hi


def _length(x, spec):
    if len(x) != spec.n:
        raise ValueError(f"sequence has length {len(x)}, expected {spec.n}")


def weight(x: Sequence[int]) -> int:
    """Number of non-zero symbols."""
    return sum(1 for s in x if s)


def count_symbol(x: Sequence[int], symbol: int) -> int:
    return sum(1 for s in x if s == symbol)


def symbol_counts(x: Sequence[int], q: int) -> list[int]:
    c = Counter(x)
    return [c.get(s, 0) for s in range(q)]


def polarity_low_count(x: Sequence[int], q: int) -> int:
    """How many symbols fall in the low half ``{0, ..., q/2 - 1}``."""
    if q % 2:
        raise ValueError("polarity needs an even alphabet")
    half = q // 2
    return sum(1 for s in x if s < half)


def in_C(x, spec: BalanceSpec) -> bool:
    _length(x, spec)
    return in_band(weight(x), spec.n, 2, spec.alpha_sq)


def in_CL(x, spec: BalanceSpec) -> bool:
    """Weight at most ``n/2 + alpha*sqrt(n)``."""
    _length(x, spec)
    return in_band(weight(x), spec.n, 2, spec.alpha_sq, side="low")


def in_CH(x, spec: BalanceSpec) -> bool:
    """Weight at least ``n/2 - alpha*sqrt(n)``."""
    _length(x, spec)
    return in_band(weight(x), spec.n, 2, spec.alpha_sq, side="high")


def in_C_pb(x, spec: BalanceSpec) -> bool:
    _length(x, spec)
    return in_band(polarity_low_count(x, spec.q), spec.n, 2, spec.alpha_sq)


def in_C_pb_L(x, spec: BalanceSpec) -> bool:
    """Low-half count at most ``n/2 + alpha*sqrt(n)``."""
    _length(x, spec)
    return in_band(polarity_low_count(x, spec.q), spec.n, 2, spec.alpha_sq, side="low")


def in_C_pb_H(x, spec: BalanceSpec) -> bool:
    """Low-half count at least ``n/2 - alpha*sqrt(n)``."""
    _length(x, spec)
    return in_band(polarity_low_count(x, spec.q), spec.n, 2, spec.alpha_sq, side="high")


def in_C_sb4(x, spec: BalanceSpec) -> bool:
    """Every one of the four symbols occurs within ``alpha*sqrt(n)`` of ``n/4`` times."""
    _length(x, spec)
    return all(in_band(c, spec.n, 4, spec.alpha_sq) for c in symbol_counts(x, 4))


def _pair_count(x, i):
    if i not in (1, 2, 3):
        raise ValueError(f"pair partner must be 1, 2 or 3, got {i}")
    return sum(1 for s in x if s == 0 or s == i)


def in_C0i(x, spec: BalanceSpec, i: int) -> bool:
    """``#0 + #i`` within ``alpha*sqrt(n)/2`` of ``n/2``."""
    _length(x, spec)
    return in_band(_pair_count(x, i), spec.n, 2, spec.alpha_sq, HALF)


def in_C0i_L(x, spec: BalanceSpec, i: int) -> bool:
    _length(x, spec)
    return in_band(_pair_count(x, i), spec.n, 2, spec.alpha_sq, HALF, side="low")


def in_C0i_H(x, spec: BalanceSpec, i: int) -> bool:
    _length(x, spec)
    return in_band(_pair_count(x, i), spec.n, 2, spec.alpha_sq, HALF, side="high")
