"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--max-degree 10] [--batch 200000]

Outputs are checked for equality before any timing is reported.
"""

import argparse
import time
from math import factorial

import numpy as np

from lehmer_norm import _kernels


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=10)
    parser.add_argument("--batch", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = _kernels.available_backends()
    if "numba" in backends:
        _kernels.norm_histogram(4, backend="numba")  # JIT / cache load outside timing

    print(f"{'task':<28}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for n in range(7, args.max_degree + 1):
        results = {b: timed(_kernels.norm_histogram, n, backend=b) for b in backends}
        outs = [r[0] for r in results.values()]
        assert all(np.array_equal(outs[0], o) for o in outs[1:]), f"histogram mismatch at n={n}"
        row(f"histogram S_{n} ({factorial(n)})", results)

    rng = np.random.default_rng(args.seed)
    n = 12
    ranks = rng.integers(0, factorial(n), size=args.batch)
    words = _kernels.unrank_batch(n, ranks)
    results = {b: timed(_kernels.norms_batch, words, backend=b) for b in backends}
    outs = [r[0] for r in results.values()]
    assert all(np.array_equal(outs[0], o) for o in outs[1:]), "norms_batch mismatch"
    row(f"norms_batch S_{n} x{args.batch}", results)


def row(label, results):
    times = [t for _, t in results.values()]
    speed = f"{times[-1] / times[0]:>9.1f}x" if len(times) > 1 else f"{'-':>10}"
    print(f"{label:<28}" + "".join(f"{t:>11.3f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
