"""Compare the compiled and pure-Python bitmask kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each case is a random coverage instance of width m with a few rows. Both
backends are checked for identical output before timing.
"""

import argparse
import random
import timeit

from bipolar_fre.kernels import BACKENDS


def make_case(seed, m, n):
    rng = random.Random(seed)

    def mask():  # sparse, never empty
        return rng.getrandbits(m) & rng.getrandbits(m) or 1

    return [mask() for _ in range(n)], [mask() for _ in range(n)], m, mask()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--widths", type=int, nargs="+", default=[12, 14, 16, 18])
    args = ap.parse_args()

    if "cython" not in BACKENDS:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'m':>3} {'kernel':<15}" + "".join(f"{name:>12}" for name in BACKENDS) + f"{'speedup':>10}")
    for m in args.widths:
        plus, minus, _, eq = make_case(m, m, 6)
        calls = {
            "sweep_family": lambda k: k.sweep_family(plus, minus, m, eq),
            "find_assignment": lambda k: k.find_assignment(plus, [0] * len(plus), m, 0),
        }
        for label, call in calls.items():
            results = [call(k) for k in BACKENDS.values()]
            assert all(r == results[0] for r in results), f"backends disagree at m={m}"
            times = {
                name: min(timeit.repeat(lambda k=k: call(k), number=1, repeat=args.repeat)) * 1000
                for name, k in BACKENDS.items()
            }
            row = f"{m:>3} {label:<15}" + "".join(f"{t:>10.2f}ms" for t in times.values())
            if "cython" in times:
                row += f"{times['python'] / times['cython']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
