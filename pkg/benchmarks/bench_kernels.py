"""Time the compiled kernels against their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from legendre_pairs import _pykernels
from legendre_pairs.field import make_field

try:
    from legendre_pairs import _kernels
except ImportError:
    _kernels = None


def cases():
    rnd = random.Random(7)
    n = 400
    a = [rnd.choice((1, -1)) for _ in range(n)]
    zeros = [0] * n
    F = make_field(3, 6)
    chi = F.chi_table
    return [
        ("correlation N=400", lambda k: k.correlation(a, zeros, a, zeros)),
        ("brute force quaternary N=5", lambda k: k.brute_force_range(5, 4, 0, 4**5, 0)),
        ("brute force binary N=10", lambda k: k.brute_force_range(10, 2, 0, 2**10, 0)),
        ("chi shift sums GF(729)", lambda k: k.chi_shift_sums(chi, 3, 6)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':<28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:<28} {py:>10.4f} {'n/a':>10} {'':>8}")
            continue
        assert list(fn(_kernels)) == list(fn(_pykernels)), name
        cy = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat))
        print(f"{name:<28} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
