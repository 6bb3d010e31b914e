"""Compare the compiled rational kernel against the pure-Python fallback.

Runs one fixed workload per backend in separate interpreter processes
(the backend is frozen at import time) and prints a timing table:

* scalar: a tight rational dot-product loop — the kernel itself;
* numberfield: products and inverses in a degree-5 extension;
* pipeline: the full definability decision on generated instances.

Usage: python3 benchmarks/bench_backends.py
"""

import json
import os
import subprocess
import sys
import time

WORKLOADS = ("scalar", "numberfield", "pipeline")


def _run_workloads():
    from hypercircles.generators import canonical_minpoly, gen_instance
    from hypercircles.hypercircle import standard_parametrization
    from hypercircles.instances import parse_instance
    from hypercircles.numberfield import NumberField
    from hypercircles.polynomials import UniPoly
    from hypercircles.rationals import BACKEND, QQ, Rational

    out = {"backend": BACKEND}

    t0 = time.perf_counter()
    acc = Rational(0)
    x = Rational(3, 7)
    y = Rational(-2, 9)
    for k in range(1, 20001):
        acc = acc + x * Rational(k, k + 1) + y / Rational(k + 2, 5)
    out["scalar"] = time.perf_counter() - t0

    field = NumberField(QQ, canonical_minpoly(5), "a")
    elems = [
        field.element([Rational(i + k, 2 * k + 1) for i in range(5)])
        for k in range(1, 40)
    ]
    t0 = time.perf_counter()
    prod = field.one
    for e in elems:
        prod = prod * e + field.gen
    for e in elems:
        _ = (prod * e).inverse()
    out["numberfield"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for seed in range(3):
        doc = gen_instance("defined", 8, minpoly=canonical_minpoly(3), seed=seed)
        _, psi = parse_instance(json.dumps(doc))
        result = standard_parametrization(psi)
        assert result.defined
    out["pipeline"] = time.perf_counter() - t0

    json.dump(out, sys.stdout)


def _spawn(backend):
    env = dict(os.environ)
    env["HYPERCIRCLES_BACKEND"] = backend
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--inner"],
        env=env,
        capture_output=True,
        text=True,
        check=False,
    )
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        raise SystemExit(f"{backend} run failed with code {proc.returncode}")
    return json.loads(proc.stdout)


def main():
    if "--inner" in sys.argv:
        _run_workloads()
        return
    results = {}
    for backend in ("pure", "compiled"):
        try:
            results[backend] = _spawn(backend)
        except SystemExit as exc:
            if backend == "compiled":
                print(f"compiled backend unavailable ({exc}); nothing to compare")
                return
            raise
    print(f"{'workload':<14} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>9}")
    for w in WORKLOADS:
        tp = results["pure"][w]
        tc = results["compiled"][w]
        ratio = tp / tc if tc > 0 else float("inf")
        print(f"{w:<14} {tp:>10.3f} {tc:>13.3f} {ratio:>8.2f}x")


if __name__ == "__main__":
    main()
