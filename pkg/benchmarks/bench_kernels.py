"""Compare the numba and numpy lattice kernels.

    python3 benchmarks/bench_kernels.py --size 200000 --family B --rank 4
    python3 benchmarks/bench_kernels.py --end-to-end --family A --rank 3 --box 4 4
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from isochar import _kernels
from isochar.rootsys import build_root_system


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def kernel_bench(args):
    rs = build_root_system(args.family, args.rank)
    simple, norm2 = rs._kernel_roots
    rng = np.random.default_rng(args.seed)
    lam = rng.integers(-20, 21, size=(args.size, simple.shape[0])) @ simple
    w = rs.weyl_group()[-1]
    num, den = w._int_matrix

    print(f"{rs.name}: {args.size} weights, best of {args.repeat}")
    if _kernels.numba_reflect_to_dominant is None:
        print("numba backend disabled; timing numpy only")
    rows = []
    for name, fn in [
        ("reflect_to_dominant", lambda k: k(lam, simple, norm2)),
        ("apply_matrix", lambda k: k(num, den, lam)),
    ]:
        np_kernel = getattr(_kernels, f"numpy_{name}")
        nb_kernel = getattr(_kernels, f"numba_{name}")
        t_np, out_np = best_of(lambda: fn(np_kernel), args.repeat)
        if nb_kernel is None:
            rows.append((name, t_np, None))
            continue
        fn(nb_kernel)  # compile or load from cache
        t_nb, out_nb = best_of(lambda: fn(nb_kernel), args.repeat)
        pairs = zip(out_np, out_nb) if isinstance(out_np, tuple) else [(out_np, out_nb)]
        assert all(np.array_equal(a, b) for a, b in pairs), f"{name}: backends disagree"
        rows.append((name, t_np, t_nb))
    print(f"{'kernel':<22}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
    for name, t_np, t_nb in rows:
        if t_nb is None:
            print(f"{name:<22}{t_np:>12.4f}{'-':>12}{'-':>10}")
        else:
            print(f"{name:<22}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x")


def end_to_end(args):
    code = (
        "import time\n"
        "from isochar import _kernels\n"
        "from isochar.bichar import hc_bigraded_character\n"
        "from isochar.rootsys import build_root_system\n"
        f"rs = build_root_system({args.family!r}, {args.rank})\n"
        "hc_bigraded_character(rs, 1, 1)\n"
        "t0 = time.perf_counter()\n"
        f"hc_bigraded_character(rs, {args.box[0]}, {args.box[1]})\n"
        "print(_kernels.BACKEND, time.perf_counter() - t0)\n"
    )
    print(f"hc_bigraded_character {args.family}{args.rank} box {tuple(args.box)}")
    for flag in ("0", "1"):
        env = dict(os.environ, ISOCHAR_DISABLE_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, seconds = out.stdout.split()
        print(f"  {backend:<6} {float(seconds):.3f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--family", default="B")
    parser.add_argument("--rank", type=int, default=4)
    parser.add_argument("--size", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--end-to-end", action="store_true", help="time a full character run under each backend")
    parser.add_argument("--box", type=int, nargs=2, default=(4, 4))
    args = parser.parse_args()
    if args.end_to_end:
        end_to_end(args)
    else:
        kernel_bench(args)


if __name__ == "__main__":
    main()
