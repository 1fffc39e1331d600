"""Pure-Python reference versions of the hot loops.

Every function here has a twin with the same signature in ``_kernels.pyx``.
Intervals are carried as integer pairs ``(lo, width)`` over an implicit
denominator ``total ** steps``, so no rational normalisation happens in the
inner loop.
"""
from bisect import bisect_right
from itertools import accumulate


def cumulative(weights):
    """Left edges of each sub-interval, as integers summing up to ``total``."""
    return [0, *accumulate(weights)][:-1]


def map_interval(positions, weights, total):
    """Walk ``positions`` (sub-interval indices) down from [0, 1).

    Returns ``(lo, width)`` such that the final interval is
    ``[lo / total**k, (lo + width) / total**k)`` with ``k = len(positions)``.
    """
    cum = cumulative(weights)
    lo = 0
    width = 1
    for j in positions:
        lo = lo * total + cum[j] * width
        width *= weights[j]
    return lo, width


def shortest_digits(lo, hi, den, base):
    """Smallest ``k`` and leftmost ``m`` with ``lo/den <= m/base**k < hi/den``."""
    k = 0
    scale = 1
    while True:
        m = -((-lo * scale) // den)
        if m * den < hi * scale:
            return m, k
        k += 1
        scale *= base


def walk(num, den, weights, total, steps):
    """Replay ``steps`` subdivisions and return the sub-interval index chosen at each.

    ``num/den`` is the point being decoded; it must lie in [0, 1).  The point is
    tracked relative to the current interval, so only the numerator and
    denominator of that relative position grow.
    """
    cum = cumulative(weights)
    out = []
    for _ in range(steps):
        x = num * total
        j = bisect_right(cum, x // den) - 1
        num = x - cum[j] * den
        den *= weights[j]
        out.append(j)
    return out


def count_vectors(n, q):
    """Enumerate every sequence of ``q**n`` and tally its symbol-count vector.

    Returns a dict mapping the count tuple ``(#0, ..., #q-1)`` to
    ``(multiplicity, first_index)`` where ``first_index`` is the position of
    the first sequence with that vector in lexicographic order.
    """
    digits = [0] * n
    counts = [0] * q
    counts[0] = n
    seen = {}
    index = 0
    total = q**n
    while index < total:
        key = tuple(counts)
        hit = seen.get(key)
        if hit is None:
            seen[key] = [1, index]
        else:
            hit[0] += 1
        index += 1
        # odometer increment, last position fastest
        pos = n - 1
        while pos >= 0:
            d = digits[pos]
            counts[d] -= 1
            if d + 1 < q:
                digits[pos] = d + 1
                counts[d + 1] += 1
                break
            digits[pos] = 0
            counts[0] += 1
            pos -= 1
    return {k: (v[0], v[1]) for k, v in seen.items()}
