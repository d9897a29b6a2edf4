"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each workload runs once per backend; the best of ``--repeat`` wall times is
reported together with the speed-up.  Results of both backends are checked
for equality before timing.
"""
import argparse
import time
from contextlib import contextmanager

import numpy as np

from shivariety import affine_weyl_group, kernels, root_system
from shivariety.characterization import equivalence_sweep
from shivariety.variety import enumerate_admitted

NAMES = ("bfs_alcoves", "coroot_first_violation")


@contextmanager
def backend(module):
    saved = {n: getattr(kernels, n) for n in NAMES}
    for n in NAMES:
        setattr(kernels, n, getattr(module, n))
    try:
        yield
    finally:
        for n, f in saved.items():
            setattr(kernels, n, f)


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def workloads(quick):
    big = "F4" if quick else "E6"
    yield f"enumerate {big}", lambda: enumerate_admitted(root_system(big)).vectors
    yield "sweep G2 [-3,3]", lambda: equivalence_sweep(root_system("G2"), radius=3)["num_disagreements"]
    G = affine_weyl_group(root_system("D4"))
    yield "ball D4 <= 10", lambda: np.asarray(G.ball(10).shi).tolist()


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="F4 instead of E6")
    args = parser.parse_args(argv)

    if kernels.compiled_backend is None:
        raise SystemExit("compiled extension not available; run "
                         "`python3 setup.py build_ext --inplace` first")

    print(f"{'workload':<20} {'cython':>10} {'python':>10} {'speed-up':>9}")
    for name, fn in workloads(args.quick):
        with backend(kernels.compiled_backend):
            fast, a = best_of(fn, args.repeat)
        with backend(kernels.python_backend):
            slow, b = best_of(fn, 1 if not args.quick and name.startswith("enumerate") else args.repeat)
        assert a == b, f"backends disagree on {name}"
        print(f"{name:<20} {fast:>9.3f}s {slow:>9.3f}s {slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
