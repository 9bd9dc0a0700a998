"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from doubleangle import _kernels

CASES = [
    ("condition_scan", 2000),
    ("condition_scan", 10000),
    ("naive_condition_scan", 300),
    ("trig_audit", 300),
    ("trig_audit", 600),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = _kernels.available_backends()
    print(f"active backend: {_kernels.BACKEND}; available: {', '.join(backends)}")
    print(f"{'kernel':<22}{'bound':>7}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, bound in CASES:
        times = []
        results = []
        for backend in backends:
            fn = getattr(_kernels.load_backend(backend), name)
            results.append(fn(bound))
            times.append(min(timeit.repeat(lambda: fn(bound), number=1, repeat=args.repeat)))
        if name != "trig_audit":
            results = [sorted(r) for r in results]
        assert all(r == results[0] for r in results), f"backends disagree on {name}({bound})"
        speed = f"{times[-1] / times[0]:9.1f}x" if len(times) > 1 else ""
        print(f"{name:<22}{bound:>7}" + "".join(f"{t:11.3f}s" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
