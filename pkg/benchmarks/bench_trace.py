"""Timing comparison of the compiled and pure-numpy trace kernels.

Runs the entanglement-trace grid in two subprocesses (one per backend,
selected through FIBERSPIN_PURE) and prints the best wall time of each.

    python benchmarks/bench_trace.py --n 1000001 --repeats 5
"""

import argparse
import os
import subprocess
import sys
import time


def timed(n: int, repeats: int) -> tuple[str, float]:
    from fiberspin.kernels import backend, ent_trace_grid

    ent_trace_grid(0.1, 0.0, 0.01, min(n, 1024))  # warm up
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        ent_trace_grid(0.1, 0.0, 0.01, n)
        best = min(best, time.perf_counter() - t0)
    return backend(), best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=1_000_001, help="grid points per run")
    parser.add_argument("--repeats", type=int, default=5, help="runs per backend, best kept")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.worker:
        name, best = timed(args.n, args.repeats)
        print(f"{name} {best:.6f}")
        return

    rows = []
    for pure in (False, True):
        env = os.environ.copy()
        if pure:
            env["FIBERSPIN_PURE"] = "1"
        else:
            env.pop("FIBERSPIN_PURE", None)
        out = subprocess.run(
            [
                sys.executable,
                os.path.abspath(__file__),
                "--worker",
                "--n",
                str(args.n),
                "--repeats",
                str(args.repeats),
            ],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        ).stdout.split()
        rows.append((out[0], float(out[1])))

    print(f"grid points: {args.n}, best of {args.repeats}")
    for name, best in rows:
        print(f"  {name:9s} {best * 1e3:9.3f} ms")
    (name_a, t_a), (name_b, t_b) = rows
    if name_a != name_b:
        print(f"  speedup   {t_b / t_a:9.2f}x")


if __name__ == "__main__":
    main()
