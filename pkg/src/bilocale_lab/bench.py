"""Benchmark the numba kernels against the pure-numpy fallbacks.

Run as `python -m bilocale_lab.bench [--n 14] [--repeat 3]`. Both
backends are imported directly (the BILOCALE_LAB_PURE_NUMPY flag only
affects which one the package itself uses), results are compared for
equality, and per-kernel timings are printed.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from . import _kernels_numpy
from .frames import Frame


def _chain_frame(n: int) -> Frame:
    leq = np.tril(np.ones((n, n), dtype=bool)).T
    return Frame(leq)


def _bench(label, fn_numba, fn_numpy, args, repeat, check=None):
    fn_numba(*args)  # compile outside the timed region
    best = {}
    for name, fn in (("numba", fn_numba), ("numpy", fn_numpy)):
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            out = fn(*args)
            times.append(time.perf_counter() - t0)
        best[name] = (min(times), out)
    t_nb, out_nb = best["numba"]
    t_np, out_np = best["numpy"]
    same = check(out_nb, out_np) if check else np.array_equal(out_nb, out_np)
    ratio = t_np / t_nb if t_nb > 0 else float("inf")
    print(f"{label:28s} numba {t_nb*1e3:9.3f} ms   numpy {t_np*1e3:9.3f} ms   x{ratio:7.1f}   equal={same}")
    return same


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=14, help="chain-frame size for the scans")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    try:
        from . import _kernels_numba
    except ImportError:
        print("numba backend unavailable; nothing to compare")
        return 1

    f = _chain_frame(args.n)
    print(f"chain frame with {args.n} elements, best of {args.repeat}\n")
    ok = True
    ok &= _bench(
        "sublocale_masks",
        _kernels_numba.sublocale_masks,
        _kernels_numpy.sublocale_masks,
        (f.meet, f.imp, f.top),
        args.repeat,
    )
    ok &= _bench(
        "frame_law_witness",
        _kernels_numba.frame_law_witness,
        _kernels_numpy.frame_law_witness,
        (f.meet, f.join, f.bottom),
        args.repeat,
        check=lambda a, b: tuple(a) == tuple(b),
    )
    ok &= _bench(
        "ideal_masks",
        _kernels_numba.ideal_masks,
        _kernels_numpy.ideal_masks,
        (f.down_masks, f.join, f.bottom),
        args.repeat,
    )
    ok &= _bench(
        "distributive_witness",
        _kernels_numba.distributive_witness,
        _kernels_numpy.distributive_witness,
        (f.meet, f.join),
        args.repeat,
        check=lambda a, b: tuple(a) == tuple(b),
    )

    masks = _kernels_numba.sublocale_masks(f.meet, f.imp, f.top)
    s_mask = int(masks[len(masks) // 2])

    def supp_nb(mask, sub, meet, top):
        return _kernels_numba.supplement_scan(mask, sub, meet, top)

    def supp_np(mask, sub, meet, top):
        return _kernels_numpy.supplement_scan(mask, sub, meet, top)

    ok &= _bench(
        "supplement_scan",
        supp_nb,
        supp_np,
        (s_mask, masks, f.meet, f.top),
        args.repeat,
        check=lambda a, b: int(a) == int(b),
    )
    print("\nall outputs equal:", bool(ok))
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
