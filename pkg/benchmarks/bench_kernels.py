"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from maminda import _backend


def cases(rng):
    a = rng.normal(size=512) + 1j * rng.normal(size=512)
    a[0] = 1.0
    a *= 0.5 ** np.arange(512) ** 0.5
    z = 0.9 * np.exp(2j * np.pi * rng.uniform(size=4096))
    t = 2 * np.pi * np.arange(4096) / 4096
    curve = np.exp(1j * t) * (1 + 0.3 * np.cos(3 * t))
    q = rng.uniform(-1.2, 1.2, size=2048) + 1j * rng.uniform(-1.2, 1.2, size=2048)
    return {
        "cauchy_mul(512)": lambda m: m.cauchy_mul(a, a),
        "series_div(512)": lambda m: m.series_div(a, a),
        "series_exp(512)": lambda m: m.series_exp(a),
        "series_log(512)": lambda m: m.series_log(a),
        "series_pow(512)": lambda m: m.series_pow(a, 0.5),
        "horner(512 x 4096)": lambda m: m.horner(a, z),
        "winding(4096 x 2048)": lambda m: m.polyline_winding_distance(
            curve.real.copy(), curve.imag.copy(), q.real.copy(), q.imag.copy()),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = _backend.available()
    rng = np.random.default_rng(1)
    print(f"{'kernel':24s}" + "".join(f"{b:>14s}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, fn in cases(rng).items():
        times = []
        for b in backends:
            mod = _backend.module(b)
            fn(mod)
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        row = f"{name:24s}" + "".join(f"{t * 1e3:12.3f}ms" for t in times)
        if len(times) > 1:
            row += f"   {times[1] / times[0]:7.1f}x"
        print(row)
    if len(backends) == 1:
        print("compiled extension not built; only the python fallback was timed")


if __name__ == "__main__":
    main()
