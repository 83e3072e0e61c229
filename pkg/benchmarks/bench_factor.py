"""Compare the compiled and pure-Python trial-division kernels.

    python benchmarks/bench_factor.py [--count N] [--bits B]

Both kernels get the same inputs: products of a smooth part and a prime
near 2^(bits/2), the worst case for trial division below 2^64.
"""

import argparse
import random
import timeit

from codegree import _pykernels, exact


def inputs(count, bits, seed=2024):
    rng = random.Random(seed)
    half = 1 << (bits // 2)
    out = []
    while len(out) < count:
        p = rng.randrange(half // 2, half) | 1
        if exact.is_prime(p):
            out.append(p * rng.randrange(2, 1 << (bits // 2 - 1)))
    return out


def run(kernel, values):
    for n in values:
        kernel(n)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--bits", type=int, default=40)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    values = inputs(args.count, args.bits)
    kernels = {"python": _pykernels.trial_factor}
    try:
        from codegree import _kernels

        kernels["compiled"] = _kernels.trial_factor
    except ImportError:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")

    if "compiled" in kernels:
        assert all(kernels["compiled"](n) == kernels["python"](n) for n in values)

    timings = {}
    for name, kernel in kernels.items():
        best = min(timeit.repeat(lambda: run(kernel, values), number=1, repeat=args.repeat))
        timings[name] = best
        print(f"{name:>9}: {best * 1e3:9.2f} ms for {len(values)} inputs of ~{args.bits} bits")
    if len(timings) == 2:
        print(f"  speedup: {timings['python'] / timings['compiled']:.1f}x")


if __name__ == "__main__":
    main()
