"""Time GF(2) row reduction with the numba kernel against the numpy kernel.

Usage: python3 benchmarks/bench_gf2.py [--sizes 64 128 256] [--repeat 3]

Also times a full tau computation on a tensor product complex with numpy
only, numba for every matrix, and the default size-based dispatch.
"""

from __future__ import annotations

import argparse
import os
import sys
import timeit

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests"))

from rhfk import _accel  # noqa: E402
from rhfk.chain import complex_from_diagram  # noqa: E402
from rhfk.diagram import trefoil_diagram  # noqa: E402
from rhfk.homology import tau_report  # noqa: E402
from rhfk.symmetries import tensor  # noqa: E402


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def bench_rref(sizes, repeat, rng):
    print(f"{'n':>6} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for n in sizes:
        M = (rng.random((n, n + n // 2)) < 0.3).astype(np.uint8)
        ref = M.copy()
        p_np = _accel.rref_numpy(ref)
        out = M.copy()
        p_nb = _accel.rref_numba(out)
        assert np.array_equal(ref, out) and np.array_equal(p_np, p_nb)
        t_np = best(lambda: _accel.rref_numpy(M.copy()), repeat)
        t_nb = best(lambda: _accel.rref_numba(M.copy()), repeat)
        print(f"{n:>6} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f}")


def bench_tau(repeat):
    T = complex_from_diagram(trefoil_diagram())
    C = tensor(tensor(T, T), T)
    saved = _accel.USE_NUMBA, _accel.NUMBA_MIN_SIZE
    try:
        times = {}
        for label, flag, cutoff in (("numpy", False, 0), ("numba", True, 0), ("default", True, saved[1])):
            _accel.USE_NUMBA, _accel.NUMBA_MIN_SIZE = flag, cutoff
            times[label] = best(lambda: tau_report(C), repeat)
    finally:
        _accel.USE_NUMBA, _accel.NUMBA_MIN_SIZE = saved
    print(f"tau of trefoil#trefoil#trefoil ({len(C.basis)} generators): "
          + ", ".join(f"{k} {v:.3f}s" for k, v in times.items()))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _accel.rref_numba is None:
        print("numba is not available")
        return 1
    _accel.rref_numba(np.eye(2, dtype=np.uint8))  # compile outside the timed region
    bench_rref(args.sizes, args.repeat, np.random.default_rng(args.seed))
    bench_tau(args.repeat)
    return 0


if __name__ == "__main__":
    sys.exit(main())
