"""Numerical analysis of how dense the almost-balanced sets are.

Floating point is allowed here; none of it feeds the coders.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

import mpmath

from . import kernels
from .constraints import band_limits, in_band

EXACT_LIMIT = 10_000
DECIMAL_DIGITS = 40


@dataclass(frozen=True)
class DensityResult:
    """Size of ``C(n, alpha*sqrt(n))`` relative to the whole space.

    ``count`` is the exact number of members when ``exact`` is true and None
    when the sum was evaluated in log space.
    """

    n: int
    alpha_sq: Fraction
    count: int | None
    fraction: Decimal
    exact: bool = True


def _as_decimal(num: int, den: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = DECIMAL_DIGITS
        return Decimal(num) / Decimal(den)


def density_F(n: int, alpha_sq, exact_limit: int = EXACT_LIMIT) -> DensityResult:
    """Fraction of binary words of length ``n`` whose weight is in the band.

    Exact big-integer binomials up to ``exact_limit``; above that the band
    sum is run in 30-digit log space (relative error far below 1e-9).
    """
    if n < 1:
        raise ValueError("n must be positive")
    alpha_sq = Fraction(alpha_sq)
    limits = band_limits(n, 2, alpha_sq)
    if limits is None:
        return DensityResult(n, alpha_sq, 0, Decimal(0))
    lo, hi = limits
    if n <= exact_limit:
        count = sum(math.comb(n, w) for w in range(lo, hi + 1))
        return DensityResult(n, alpha_sq, count, _as_decimal(count, 2**n))
    with mpmath.workdps(30):
        term = mpmath.exp(
            mpmath.loggamma(n + 1)
            - mpmath.loggamma(lo + 1)
            - mpmath.loggamma(n - lo + 1)
            - n * mpmath.log(2)
        )
        total = mpmath.mpf(0)
        for w in range(lo, hi + 1):
            total += term
            term = term * (n - w) / (w + 1)
        text = mpmath.nstr(total, 25, strip_zeros=False)
    return DensityResult(n, alpha_sq, None, Decimal(text), exact=False)


def density_F_pb(n: int, q: int, alpha_sq) -> DensityResult:
    """Polarity-balanced density over ``q``-ary words.

    Each binary low/high pattern stands for ``(q/2)**n`` words, so this is the
    binary density.  :func:`density_F_pb_bruteforce` checks that by enumeration.
    """
    if q < 2 or q % 2:
        raise ValueError("polarity density needs an even q")
    return density_F(n, alpha_sq)


def density_F_pb_bruteforce(n: int, q: int, alpha_sq) -> DensityResult:
    """Count polarity-balanced words by visiting all ``q**n`` of them."""
    if q < 2 or q % 2:
        raise ValueError("polarity density needs an even q")
    alpha_sq = Fraction(alpha_sq)
    half = q // 2
    count = 0
    for counts, (mult, _) in kernels.count_vectors(n, q).items():
        if in_band(sum(counts[:half]), n, 2, alpha_sq):
            count += mult
    return DensityResult(n, alpha_sq, count, _as_decimal(count, q**n))


def phi(z: float) -> float:
    """Standard normal CDF."""
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


def limit_density(alpha: float) -> float:
    """Large-n limit of ``F(n, alpha)``: ``2*Phi(2*alpha) - 1``.

    The weight of a uniform word has standard deviation ``sqrt(n)/2``, so a
    radius of ``alpha*sqrt(n)`` is ``2*alpha`` standard deviations.
    """
    return 2.0 * phi(2.0 * alpha) - 1.0


def _plain(d: Decimal) -> str:
    return format(d.normalize(), "f")


@dataclass(frozen=True)
class BoundsRow:
    q: int
    lower_alpha: Decimal
    upper_alpha: Decimal
    finite_n: int | None = None
    finite_lower: Decimal | None = None
    finite_upper: Decimal | None = None


@dataclass(frozen=True)
class BoundsTable:
    grid_step: Decimal
    rows: tuple[BoundsRow, ...]

    def records(self) -> list[dict]:
        out = []
        for r in self.rows:
            rec = {"q": r.q, "lower": _plain(r.lower_alpha), "upper": _plain(r.upper_alpha)}
            if r.finite_n is not None:
                rec["finite_n"] = r.finite_n
                rec["F_lower"] = float(r.finite_lower)
                rec["F_upper"] = float(r.finite_upper)
            out.append(rec)
        return out

    def to_text(self) -> str:
        checked = any(r.finite_n is not None for r in self.rows)
        head = f"{'q':>3}  {'lower':>8}  {'upper':>8}"
        if checked:
            head += f"  {'F(n,lower)':>12}  {'F(n,upper)':>12}  {'1/q':>10}"
        lines = [head]
        for r in self.rows:
            line = f"{r.q:>3}  {_plain(r.lower_alpha):>8}  {_plain(r.upper_alpha):>8}"
            if r.finite_n is not None:
                line += (
                    f"  {float(r.finite_lower):>12.8f}  {float(r.finite_upper):>12.8f}"
                    f"  {1 / r.q:>10.8f}"
                )
            lines.append(line)
        return "\n".join(lines)


def table_bounds(q_values=range(2, 8), grid_step="0.005", check_n: int | None = None) -> BoundsTable:
    """Bracket, on a grid, the smallest alpha whose limiting density reaches ``1/q``.

    ``upper`` is the first grid point with ``limit_density >= 1/q`` and
    ``lower`` the one before it.  With ``check_n`` the finite-n densities at
    both points are attached for comparison.
    """
    step = Decimal(str(grid_step))
    if step <= 0:
        raise ValueError("grid step must be positive")
    rows = []
    for q in q_values:
        if q < 2:
            raise ValueError(f"q must be at least 2, got {q}")
        target = 1.0 / q
        k = 1
        while limit_density(float(k * step)) < target:
            k += 1
        lower, upper = (k - 1) * step, k * step
        row = BoundsRow(q, lower, upper)
        if check_n is not None:
            row = BoundsRow(
                q,
                lower,
                upper,
                check_n,
                density_F(check_n, Fraction(lower) ** 2).fraction,
                density_F(check_n, Fraction(upper) ** 2).fraction,
            )
        rows.append(row)
    return BoundsTable(step, tuple(rows))


def limit_ratio(n: int, alpha: float) -> float:
    """Finite-n value of ``2**(n-2) * (1/2 - d)**(n/2 - a) * (1/2 + d)**(n/2 + a)``.

    Here ``a = alpha*sqrt(n)`` and ``d = alpha/sqrt(n) + 1/n``.  It tends to
    ``exp(2 alpha^2) / 4`` as ``n`` grows; a value of at least 1 means the
    continuous worst case fits in ``n-2`` bits.
    """
    a = alpha * math.sqrt(n)
    d = alpha / math.sqrt(n) + 1.0 / n
    if not 0.5 + d < 1:
        raise ValueError(f"p_L = {0.5 + d} is not below 1 for n={n}, alpha={alpha}")
    # 2**(n-2) * 2**-n folds into the -2 ln 2 term
    log_value = -2.0 * math.log(2.0) + (n / 2 - a) * math.log1p(-2 * d) + (n / 2 + a) * math.log1p(2 * d)
    return math.exp(log_value)


@dataclass(frozen=True)
class ContainmentResult:
    holds: bool
    counterexample: tuple[int, ...] | None
    checked: int


def _index_to_word(index: int, n: int, q: int) -> tuple[int, ...]:
    out = [0] * n
    for j in range(n - 1, -1, -1):
        index, out[j] = divmod(index, q)
    return tuple(out)


def verify_containment(n: int, alpha_sq) -> ContainmentResult:
    """Check over all of ``Sigma_4^n`` that the three pair bands imply symbol balance.

    Returns the lexicographically first word that lies in every pair band
    but not in the symbol-balanced set, if there is one.
    """
    if not 1 <= n <= 10:
        raise ValueError("exhaustive containment check supports 1 <= n <= 10")
    alpha_sq = Fraction(alpha_sq)
    half = Fraction(1, 2)
    worst = None
    checked = 0
    for counts, (mult, first) in kernels.count_vectors(n, 4).items():
        checked += mult
        in_pairs = all(in_band(counts[0] + counts[i], n, 2, alpha_sq, half) for i in (1, 2, 3))
        if not in_pairs:
            continue
        if not all(in_band(c, n, 4, alpha_sq) for c in counts):
            worst = first if worst is None else min(worst, first)
    if worst is None:
        return ContainmentResult(True, None, checked)
    return ContainmentResult(False, _index_to_word(worst, n, 4), checked)


@dataclass(frozen=True)
class ZScoreReport:
    phi_068: float
    phi_067: float
    mass_068: float
    mass_067: float

    @property
    def ok(self) -> bool:
        return self.mass_068 >= 0.5 > self.mass_067


def zscore_sanity() -> ZScoreReport:
    """Central normal mass within 0.68 and 0.67 standard deviations."""
    p68, p67 = phi(0.68), phi(0.67)
    return ZScoreReport(p68, p67, 2 * p68 - 1, 2 * p67 - 1)
