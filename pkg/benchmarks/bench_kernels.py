"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit
from fractions import Fraction

from almostbalanced import _kernels_py, kernels
from almostbalanced.codec import dyadic_bias

try:
    from almostbalanced import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def workloads(mod):
    rng = random.Random(1)
    n, q = 64, 4
    p = dyadic_bias(n, 1, 96)
    den = p.denominator
    weights = (p.numerator,) * 2 + (den - p.numerator,) * 2
    total = 2 * den
    positions = [rng.randrange(q) for _ in range(n)]
    lo, width = mod.map_interval(positions, weights, total)
    full = total**n
    m, k = mod.shortest_digits(lo, lo + width, full, q)

    return {
        "map_interval n=64 q=4": lambda: mod.map_interval(positions, weights, total),
        "shortest_digits n=64 q=4": lambda: mod.shortest_digits(lo, lo + width, full, q),
        "walk n=64 q=4": lambda: mod.walk(m, q**k, weights, total, n),
        "count_vectors n=8 q=6": lambda: mod.count_vectors(8, 6),
    }


def encode_workload():
    from almostbalanced import CodecConfig, balancer_for

    bal = balancer_for(CodecConfig("binary", 30, 1))
    rng = random.Random(2)
    inputs = [tuple(rng.getrandbits(1) for _ in range(29)) for _ in range(2000)]
    return lambda: [bal.encode(x) for x in inputs]


def patched(mod, fn):
    names = ("map_interval", "shortest_digits", "walk", "count_vectors", "cumulative")
    saved = {name: getattr(kernels, name) for name in names}
    for name in names:
        setattr(kernels, name, getattr(mod, name))
    try:
        return fn()
    finally:
        for name, value in saved.items():
            setattr(kernels, name, value)


def best(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    mods = [("python", _kernels_py)]
    if _kernels_c is not None:
        mods.append(("cython", _kernels_c))
    else:
        print("compiled extension not available; timing the Python kernels only")

    results = {}
    for label, mod in mods:
        for name, fn in workloads(mod).items():
            results.setdefault(name, {})[label] = best(fn, args.repeat)
        results.setdefault("encode 2000 words n=30", {})[label] = patched(
            mod, lambda: best(encode_workload(), args.repeat)
        )

    header = f"{'workload':<28}" + "".join(f"{label:>14}" for label, _ in mods)
    if len(mods) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, row in results.items():
        line = f"{name:<28}" + "".join(f"{row[label] * 1e3:>11.3f} ms" for label, _ in mods)
        if len(mods) == 2:
            line += f"{row['python'] / row['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
