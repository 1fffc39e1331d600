"""Single-redundancy balancing encoders and decoders.

Each encoder appends ``0`` to the input and, while the word is outside the
target constraint, re-encodes it with the arithmetic coder that favours the
over-represented side and appends flag symbols recording which coder fired.
The decoder undoes one step per flag until it meets the trailing ``0``.

Modes:

``binary``
    ``q = 2``; inner output ``n-2`` bits; flags ``11`` (zeros favoured) and
    ``01`` (ones favoured).
``polarity``
    even ``q >= 4``; inner output ``n-1`` symbols; flag ``1`` when the low
    half ``{0..q/2-1}`` is over-represented, ``2`` when the high half is.
``symbol4``
    ``q = 4``; inner output ``n-2`` symbols followed by ``f, i`` where ``i``
    names the violated pair ``{0, i}`` and ``f`` is ``1`` if the pair is
    over-represented, else ``0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from . import constraints as cs
from .codec import CoderParams, decode, dyadic_bias, encode
from .constraints import SymbolSequence
from .errors import InsufficientCompression, InvalidProbability, IterationGuardExceeded

MODES = ("binary", "polarity", "symbol4")
DEFAULT_BITS = 96


@dataclass(frozen=True)
class CodecConfig:
    mode: str
    n: int
    alpha_sq: Fraction
    q: int | None = None
    precision_bits: int = DEFAULT_BITS
    max_iterations: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        q = self.q
        if q is None:
            q = 2 if self.mode == "binary" else 4
        if self.mode == "binary" and q != 2:
            raise ValueError("binary mode requires q=2")
        if self.mode == "polarity" and (q < 4 or q % 2):
            raise ValueError("polarity mode requires an even q >= 4")
        if self.mode == "symbol4" and q != 4:
            raise ValueError("symbol4 mode requires q=4")
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.precision_bits < 2:
            raise ValueError("precision_bits must be at least 2")
        alpha_sq = Fraction(self.alpha_sq)
        if alpha_sq <= 0:
            raise ValueError("alpha^2 must be positive")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "alpha_sq", alpha_sq)

    @property
    def target_len(self) -> int:
        return self.n - 1 if self.mode == "polarity" else self.n - 2

    @property
    def iteration_cap(self) -> int:
        return self.max_iterations if self.max_iterations is not None else 10 * self.n

    @property
    def band_scale(self) -> Fraction:
        # the pair constraints of symbol4 use half the radius
        return Fraction(1, 2) if self.mode == "symbol4" else Fraction(1)

    @cached_property
    def p_low(self) -> Fraction:
        """Bias of the coder that favours the over-represented side."""
        return dyadic_bias(self.n, self.alpha_sq, self.precision_bits, self.band_scale)

    @property
    def p_high(self) -> Fraction:
        return 1 - self.p_low

    @property
    def spec(self) -> cs.BalanceSpec:
        return cs.BalanceSpec(self.n, self.q, self.alpha_sq)


@dataclass(frozen=True)
class EncodeReport:
    codeword: SymbolSequence
    iterations: int
    branch_trace: tuple[str, ...] = field(default=())


def _favoured_count_limits(config: CodecConfig):
    """Worst-case favoured-symbol counts for each branch.

    The tracked statistic is the number of symbols the coder favours: zeros
    (binary), low-half symbols (polarity) or ``0``/``i`` (symbol4).  Returns
    ``(smallest count above the band, largest count below it)``, either of
    which may be None when that side is empty.
    """
    n = config.n
    limits = cs.band_limits(n, 2, config.alpha_sq, config.band_scale)
    if limits is None:
        # no integer in the band: everything splits around n/2
        return n // 2 + 1, (n - 1) // 2
    lo, hi = limits
    return (hi + 1 if hi < n else None), (lo - 1 if lo > 0 else None)


def validate_config(config: CodecConfig) -> None:
    """Raise unless every out-of-band word fits in ``target_len`` symbols.

    For a word whose favoured count is ``s``, the coder with bias ``p`` maps it
    to an interval of length ``(p/h)**s * ((1-p)/h)**(n-s)`` with ``h = q/2``.
    Any interval at least ``q**-target_len`` long contains a fraction with at
    most ``target_len`` digits, and the length is monotone in ``s``, so only
    the count nearest the band on each side has to be checked.
    """
    p = config.p_low
    if not Fraction(1, 2) < p < 1:
        raise InvalidProbability(
            f"p_L = {float(p):.6g} is outside (1/2, 1) for n={config.n}, "
            f"alpha^2={config.alpha_sq}"
        )
    n, q = config.n, config.q
    big, den = p.numerator, p.denominator
    small = den - big
    rhs = ((q // 2) * den) ** n  # interval lengths are integers over this
    need = q**config.target_len
    above, below = _favoured_count_limits(config)
    for s, (fav, other) in ((above, (big, small)), (below, (small, big))):
        if s is None:
            continue
        # coder that favours the over-represented side: p_L above, p_H below
        if fav**s * other ** (n - s) * need < rhs:
            raise InsufficientCompression(
                f"a word with favoured count {s} does not fit in {config.target_len} "
                f"symbols (n={n}, q={q}, alpha^2={config.alpha_sq})"
            )


class Balancer:
    """Encoder/decoder pair for one validated :class:`CodecConfig`."""

    def __init__(self, config: CodecConfig):
        validate_config(config)
        self.config = config
        n, q = config.n, config.q
        self.spec = config.spec
        L = config.target_len
        pl, ph = config.p_low, config.p_high
        if config.mode == "symbol4":
            self._coders = {
                (tag, i): CoderParams(n, 4, p, L, remap_symbol=i)
                for i in (1, 2, 3)
                for tag, p in (("L", pl), ("H", ph))
            }
        else:
            self._coders = {
                "L": CoderParams(n, q, pl, L),
                "H": CoderParams(n, q, ph, L),
            }

    # -- membership ---------------------------------------------------------

    def is_member(self, y: Sequence[int]) -> bool:
        mode = self.config.mode
        if mode == "binary":
            return cs.in_C(y, self.spec)
        if mode == "polarity":
            return cs.in_C_pb(y, self.spec)
        return cs.in_C_sb4(y, self.spec)

    # -- one loop body ------------------------------------------------------

    def _step(self, y):
        mode = self.config.mode
        if mode == "binary":
            # C_L holds: ones are scarce, so favour zeros
            tag = "L" if cs.in_CL(y, self.spec) else "H"
            flag = (1, 1) if tag == "L" else (0, 1)
            return encode(y, self._coders[tag]) + flag, tag
        if mode == "polarity":
            tag = "H" if cs.in_C_pb_L(y, self.spec) else "L"
            flag = (1,) if tag == "L" else (2,)
            return encode(y, self._coders[tag]) + flag, tag
        for i in (1, 2, 3):
            if not cs.in_C0i(y, self.spec, i):
                tag = "H" if cs.in_C0i_L(y, self.spec, i) else "L"
                flag = 1 if tag == "L" else 0
                return encode(y, self._coders[tag, i]) + (flag, i), f"{tag}{i}"
        # unreachable: the three pair bands together imply symbol balance
        raise AssertionError("word satisfies every pair constraint but is not symbol-balanced")

    def _sequence(self, x, length):
        if isinstance(x, str):
            x = SymbolSequence.parse(x, self.config.q)
        x = tuple(x)
        if len(x) != length:
            raise ValueError(f"expected length {length}, got {len(x)}")
        q = self.config.q
        if any(not 0 <= s < q for s in x):
            raise ValueError(f"symbol outside alphabet of size {q}")
        return x

    def step_map(self, y: Sequence[int]) -> SymbolSequence:
        """Apply the loop body once to a non-member ``y``."""
        y = self._sequence(y, self.config.n)
        if self.is_member(y):
            raise ValueError("step_map is only defined outside the constraint")
        out, _ = self._step(y)
        return SymbolSequence(self.config.q, out)

    # -- public API ---------------------------------------------------------

    def encode(self, x: Sequence[int]) -> EncodeReport:
        y = self._sequence(x, self.config.n - 1) + (0,)
        trace = []
        cap = self.config.iteration_cap
        while not self.is_member(y):
            if len(trace) >= cap:
                raise IterationGuardExceeded(f"no balanced word after {cap} iterations")
            y, tag = self._step(y)
            trace.append(tag)
        return EncodeReport(SymbolSequence(self.config.q, y), len(trace), tuple(trace))

    def decode(self, y: Sequence[int]) -> SymbolSequence:
        y = self._sequence(y, self.config.n)
        mode = self.config.mode
        cap = self.config.iteration_cap
        rounds = 0
        while y[-1] != 0:
            if rounds >= cap:
                raise IterationGuardExceeded(f"decoder did not reach a 0 flag after {cap} rounds")
            rounds += 1
            if mode == "binary":
                coder = self._coders["L" if y[-2] == 1 else "H"]
                y = decode(y[:-2], coder)
            elif mode == "polarity":
                if y[-1] not in (1, 2):
                    raise ValueError(f"invalid flag symbol {y[-1]}")
                coder = self._coders["L" if y[-1] == 1 else "H"]
                y = decode(y[:-1], coder)
            else:
                if y[-2] not in (0, 1):
                    raise ValueError(f"invalid branch symbol {y[-2]}")
                coder = self._coders["L" if y[-2] == 1 else "H", y[-1]]
                y = decode(y[:-2], coder)
        return SymbolSequence(self.config.q, y[:-1])


@lru_cache(maxsize=64)
def balancer_for(config: CodecConfig) -> Balancer:
    return Balancer(config)


def _require(config, mode):
    if config.mode != mode:
        raise ValueError(f"config is for mode {config.mode!r}, not {mode!r}")
    return balancer_for(config)


def encode_balanced(x, config: CodecConfig) -> EncodeReport:
    return _require(config, "binary").encode(x)


def decode_balanced(y, config: CodecConfig) -> SymbolSequence:
    return _require(config, "binary").decode(y)


def encode_polarity(x, config: CodecConfig) -> EncodeReport:
    return _require(config, "polarity").encode(x)


def decode_polarity(y, config: CodecConfig) -> SymbolSequence:
    return _require(config, "polarity").decode(y)


def encode_symbol4(x, config: CodecConfig) -> EncodeReport:
    return _require(config, "symbol4").encode(x)


def decode_symbol4(y, config: CodecConfig) -> SymbolSequence:
    return _require(config, "symbol4").decode(y)


def step_map(y, config: CodecConfig) -> SymbolSequence:
    return balancer_for(config).step_map(y)
