"""Compiled kernels vs the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit

from reflex import _accel
from reflex.weylpoincare import alcove_data

CASES = [
    ("signature_codes G(4,2,4)", lambda be: _accel.signature_codes(4, 2, 4, backend=be)),
    ("signature_codes G(6,3,4)", lambda be: _accel.signature_codes(6, 3, 4, backend=be)),
    ("signature_codes G(3,1,5)", lambda be: _accel.signature_codes(3, 1, 5, backend=be)),
    ("alcove_counts C3 to q^20", lambda be: _accel.alcove_counts(*alcove_data("C", 3), 20, backend=be)),
    ("alcove_counts G2 to q^30", lambda be: _accel.alcove_counts(*alcove_data("G", 2), 30, backend=be)),
    ("alcove_counts F4 to q^10", lambda be: _accel.alcove_counts(*alcove_data("F", 4), 10, backend=be)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _accel.BACKEND != "cython":
        print("compiled extension not available; timing the fallback only")
    print(f"{'kernel':30s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in CASES:
        tp = min(timeit.repeat(lambda: fn("python"), number=1, repeat=args.repeat))
        if _accel.BACKEND == "cython":
            tc = min(timeit.repeat(lambda: fn("cython"), number=1, repeat=args.repeat))
            print(f"{name:30s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")
        else:
            print(f"{name:30s} {tp:10.4f} {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
