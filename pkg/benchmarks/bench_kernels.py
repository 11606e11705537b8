"""Compiled versus pure-Python group kernels.

Runs each kernel on the multiplication table of S6 with both backends, then
times full subgroup enumeration of S6 in a fresh interpreter per backend.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

from cmfields import kernels
from cmfields.permgroup import symmetric_group

ENUMERATE = (
    "import time; t=time.perf_counter();"
    "from cmfields.permgroup import symmetric_group, subgroup_classes;"
    "from cmfields import kernels;"
    "n=len(subgroup_classes(symmetric_group(6)));"
    "print(kernels.BACKEND, n, time.perf_counter()-t)"
)


def kernel_times(repeat: int) -> dict[str, dict[str, float]]:
    S6 = symmetric_group(6)
    t = S6.table
    gens = [t.element_index(g) for g in S6.generators]
    half = t.closure([t.element_index(g) for g in symmetric_group(6).stabilizer(0).generators])
    members = t.indices(half)
    conj = list(range(0, t.n, 7))
    out = {}
    for name, impl in kernels.implementations().items():
        mul, inv = t.native(name)
        cases = {
            "closure": lambda: impl.closure(mul, t.n, gens, t.identity),
            "conjugate_masks": lambda: impl.conjugate_masks(mul, inv, t.n, members, conj),
            "left_coset_labels": lambda: impl.left_coset_labels(mul, t.n, members),
        }
        out[name] = {k: min(timeit.repeat(f, number=1, repeat=repeat)) for k, f in cases.items()}
    return out


def enumeration_time(pure: bool) -> str:
    env = dict(os.environ)
    if pure:
        env["CMFIELDS_PURE_PYTHON"] = "1"
    res = subprocess.run([sys.executable, "-c", ENUMERATE], env=env, capture_output=True, text=True, check=True)
    return res.stdout.strip()


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    times = kernel_times(args.repeat)
    names = list(times)
    print(f"{'kernel':<20}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for k in times[names[0]]:
        row = f"{k:<20}" + "".join(f"{times[n][k] * 1e3:>10.3f}ms" for n in names)
        if "cython" in times:
            row += f"{times['python'][k] / times['cython'][k]:>11.1f}x"
        print(row)
    print()
    print("S6 subgroup classes (backend, classes, seconds):")
    for pure in (False, True):
        print("  " + enumeration_time(pure))
    return 0


if __name__ == "__main__":
    sys.exit(main())
