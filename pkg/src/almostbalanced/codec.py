"""Fixed-length biased arithmetic coders.

A coder maps a length-``n`` sequence to the sub-interval of [0, 1) reached by
``n`` biased splits, and emits the shortest base-``q`` fraction inside it,
zero-padded to ``target_len`` digits.  Decoding replays the splits around that
fraction.

Three partitions are supported:

* binary: ``[p, 1-p]``
* polarity: ``q/2`` parts of ``2p/q`` followed by ``q/2`` parts of ``2(1-p)/q``
* remapped 4-ary: as polarity with ``q=4``, but the two large parts are
  assigned to symbols ``0`` and ``i``

``p`` is a dyadic rational ``P / 2**bits`` so the whole walk stays in
integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import kernels
from .errors import OutputTooLong
from .intervals import DigitString, Interval, digits_to_int, int_to_digits


def remap_order(i: int) -> tuple[int, int, int, int]:
    """Symbols in sub-interval order: ``0``, ``i``, then the other two ascending."""
    if i not in (1, 2, 3):
        raise ValueError(f"remap symbol must be 1, 2 or 3, got {i}")
    rest = [s for s in (1, 2, 3) if s != i]
    return (0, i, rest[0], rest[1])


def dyadic_bias(n: int, alpha_sq, bits: int, alpha_scale=1) -> Fraction:
    """``1/2 + s*alpha/sqrt(n) + 1/n`` rounded to the nearest multiple of ``2**-bits``."""
    radius = Fraction(alpha_scale) ** 2 * Fraction(alpha_sq) / n
    guard = 1 << (bits + 16)
    root = Fraction(isqrt(radius.numerator * guard * guard // radius.denominator), guard)
    value = Fraction(1, 2) + root + Fraction(1, n)
    return Fraction(round(value * (1 << bits)), 1 << bits)


@dataclass(frozen=True)
class CoderParams:
    """One coder instance.

    ``p`` must be dyadic.  ``remap_symbol`` selects the remapped 4-ary
    partition; it is only meaningful with ``q == 4``.
    """

    n: int
    q: int
    p: Fraction
    target_len: int
    remap_symbol: int | None = None
    _order: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _position: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _weights: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _total: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = Fraction(self.p)
        object.__setattr__(self, "p", p)
        if not 0 < p < 1:
            raise ValueError(f"p must lie in (0, 1), got {p}")
        den = p.denominator
        if den & (den - 1):
            raise ValueError(f"p must be dyadic, got {p}")
        if self.q < 2 or self.q % 2:
            raise ValueError(f"q must be even and at least 2, got {self.q}")
        if not 0 <= self.target_len < self.n:
            raise ValueError("target_len must be shorter than n")
        if self.remap_symbol is None:
            order = tuple(range(self.q))
        elif self.q != 4:
            raise ValueError("symbol remapping is defined for q=4 only")
        else:
            order = remap_order(self.remap_symbol)
        half = self.q // 2
        big, small = p.numerator, den - p.numerator
        position = [0] * self.q
        for pos, sym in enumerate(order):
            position[sym] = pos
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_position", tuple(position))
        object.__setattr__(self, "_weights", (big,) * half + (small,) * half)
        object.__setattr__(self, "_total", half * den)

    def denominator(self) -> int:
        return self._total**self.n


def _check_input(x, params):
    if len(x) != params.n:
        raise ValueError(f"input has length {len(x)}, expected {params.n}")


def interval_ints(x: Sequence[int], params: CoderParams) -> tuple[int, int]:
    """``(lo, width)`` of ``x``'s interval over ``params.denominator()``."""
    _check_input(x, params)
    position = params._position
    try:
        positions = [position[s] for s in x]
    except IndexError:
        raise ValueError(f"symbol outside alphabet of size {params.q}") from None
    if any(s < 0 for s in x):
        raise ValueError("negative symbol")
    return kernels.map_interval(positions, params._weights, params._total)


def map_to_interval(x: Sequence[int], params: CoderParams) -> Interval:
    lo, width = interval_ints(x, params)
    den = params.denominator()
    return Interval(Fraction(lo, den), Fraction(lo + width, den))


def encode_digits(x: Sequence[int], params: CoderParams) -> DigitString:
    """Shortest fraction in ``x``'s interval, unpadded."""
    lo, width = interval_ints(x, params)
    m, k = kernels.shortest_digits(lo, lo + width, params.denominator(), params.q)
    return DigitString(params.q, int_to_digits(m, k, params.q))


def encode(x: Sequence[int], params: CoderParams) -> tuple[int, ...]:
    """Encode ``x`` to exactly ``params.target_len`` symbols."""
    lo, width = interval_ints(x, params)
    m, k = kernels.shortest_digits(lo, lo + width, params.denominator(), params.q)
    if k > params.target_len:
        raise OutputTooLong(
            f"shortest fraction needs {k} digits, only {params.target_len} available"
        )
    # trailing zeros keep the value: m * q**(L-k) / q**L
    return int_to_digits(m * params.q ** (params.target_len - k), params.target_len, params.q)


def decode(d: Sequence[int], params: CoderParams) -> tuple[int, ...]:
    """Walk ``n`` splits around the fraction ``0.d1 d2 ...`` and read off the symbols.

    Any number of digits is accepted; trailing zeros do not matter.
    """
    if any(not 0 <= s < params.q for s in d):
        raise ValueError(f"digit outside alphabet of size {params.q}")
    num = digits_to_int(d, params.q)
    den = params.q ** len(d)
    positions = kernels.walk(num, den, params._weights, params._total, params.n)
    order = params._order
    return tuple(order[j] for j in positions)
