"""Compare the compiled and pure-numpy geometry kernels.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``. Workloads
mirror what one episode step costs: a swept-footprint collision check,
one ray scan and one occupancy raster.
"""

import argparse
import timeit

import numpy as np

from drip import _kernels_py

try:
    from drip import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def workloads(rng):
    obstacles = np.column_stack([rng.uniform(-10, 10, (12, 2)), rng.uniform(-np.pi, np.pi, 12),
                                 rng.uniform(0.5, 3, 12), rng.uniform(0.2, 1.5, 12)])
    sweep = np.column_stack([np.linspace(-8, 8, 41), np.full(41, 14.0), np.linspace(0, 1, 41),
                             np.full(41, 2.3), np.full(41, 0.9)])
    a = np.column_stack([rng.uniform(-5, 5, (2000, 2)), rng.uniform(-np.pi, np.pi, 2000),
                         rng.uniform(0.2, 2, (2000, 2))])
    b = np.column_stack([rng.uniform(-5, 5, (2000, 2)), rng.uniform(-np.pi, np.pi, 2000),
                         rng.uniform(0.2, 2, (2000, 2))])
    angles = np.linspace(-np.pi, np.pi, 36, endpoint=False)
    return {
        "first_collision (41 poses x 12 boxes, no hit)": lambda k: k.first_collision(sweep, obstacles),
        "collide_pairs (2000 pairs)": lambda k: k.collide_pairs(a, b),
        "cast_rays (36 rays, 12 boxes)": lambda k: k.cast_rays(0.0, 0.0, angles, obstacles, 12.0),
        "rasterize (64x64, 12 boxes)": lambda k: k.rasterize(0.0, 0.0, 0.3, obstacles, 64, 64, 0.25),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args(argv)
    backends = {"python": _kernels_py}
    if _kernels_c is not None:
        backends["cython"] = _kernels_c
    else:
        print("compiled kernels not built; timing the numpy fallback only")
    print(f"{'workload':48s}" + "".join(f"{n:>12s}" for n in backends) + "   speed-up")
    for name, fn in workloads(np.random.default_rng(0)).items():
        times = {}
        for bname, k in backends.items():
            fn(k)
            times[bname] = min(timeit.repeat(lambda: fn(k), number=args.repeat, repeat=3)) / args.repeat
        row = f"{name:48s}" + "".join(f"{t * 1e6:10.1f}us" for t in times.values())
        if "cython" in times:
            row += f"   {times['python'] / times['cython']:8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
