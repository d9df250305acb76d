"""Compare the compiled kernel against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Reports best-of-N wall time for the raw kernels on random operands and for
two end-to-end workloads that lean on them.
"""

import argparse
import random
import time

from carlitzlab import _kernels_py, kernel


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def rand_poly(rng, p, n):
    return [rng.randrange(p) for _ in range(n)] + [1]


def end_to_end_orthogonality():
    from carlitzlab.carlitz import context
    from carlitzlab.stirling_carlitz import verify_orthogonality

    context.cache_clear()
    assert verify_orthogonality(5, 4).ok and verify_orthogonality(3, 5).ok


def end_to_end_high_degree():
    # D_7 for r = 3 has degree 15309; the exact divisions dominate
    from carlitzlab.carlitz import context
    from carlitzlab.stirling_carlitz import stf_A, sts_A

    context.cache_clear()
    for i in range(8):
        stf_A(3, 7, i)
        sts_A(3, 7, i)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    try:
        from carlitzlab import _kernels
    except ImportError:
        print("compiled extension not built; nothing to compare")
        return
    rng = random.Random(1)
    backends = {"compiled": _kernels, "python": _kernels_py}
    print(f"{'workload':40s} {'compiled':>10s} {'python':>10s} {'speedup':>8s}")
    for p in (3, 65521):
        for n in (16, 64, 256, 1024):
            a, b = rand_poly(rng, p, n), rand_poly(rng, p, n)
            big = kernel.mul(a, b, p) + [1]
            row = {}
            for name, mod in backends.items():
                row[name] = (
                    best(lambda: mod.mul(a, b, p), args.repeat),
                    best(lambda: mod.divmod_(big, b, p), args.repeat),
                    best(lambda: mod.gcd(big, a, p), args.repeat),
                )
            for j, op in enumerate(("mul", "divmod", "gcd")):
                c, py = row["compiled"][j], row["python"][j]
                print(f"{op + f' p={p} n={n}':40s} {c * 1e3:9.3f}ms {py * 1e3:9.3f}ms {py / c:7.1f}x")
            kr = best(lambda: kernel.kronecker_mul(a, b, p), args.repeat)
            print(f"{f'kronecker mul p={p} n={n}':40s} {kr * 1e3:9.3f}ms {'(shared)':>10s}")
    for label, fn in (("orthogonality r=5 n<=4, r=3 n<=5", end_to_end_orthogonality),
                      ("Stirling-Carlitz r=3 n=7, both kinds", end_to_end_high_degree)):
        row = {}
        for name in backends:
            kernel.use_backend(name)
            row[name] = best(fn, max(1, args.repeat // 2))
        kernel.use_backend("compiled")
        c, py = row["compiled"], row["python"]
        print(f"{label:40s} {c * 1e3:9.1f}ms {py * 1e3:9.1f}ms {py / c:7.1f}x")


if __name__ == "__main__":
    main()
