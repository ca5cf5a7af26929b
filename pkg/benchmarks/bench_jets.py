"""Compare the compiled and pure-Python jet backends.

Run with ``python benchmarks/bench_jets.py``. Each workload is timed with
``timeit`` on both backends; the compiled backend is skipped if the extension
was not built.
"""

import argparse
import importlib
import math
import timeit


def _backends():
    out = {"python": importlib.import_module("ghpkerr.jets._jetpy")}
    try:
        out["cython"] = importlib.import_module("ghpkerr.jets._jet2")
    except ImportError:
        pass
    return out


def kerr_component(J):
    """g_phiphi of the Kerr metric with full second-order jets."""
    t, r, th, ph = (J.lift(i, v) for i, v in enumerate((0.0, 3.0, 1.1, 0.4)))
    M, a = 1.0, 0.5
    ct, st = J.cos(th), J.sin(th)
    s2 = st * st
    rho2 = r * r + a * a * ct * ct
    return -s2 * (r * r + a * a + 2.0 * M * a * a * r * s2 / rho2)


def chain(J, depth=50):
    x = J.lift(1, 0.7)
    y = x
    for _ in range(depth):
        y = J.sqrt(y * y + 1.0) * J.sin(x) + J.recip(y + 2.0)
    return y


WORKLOADS = {"kerr_component": kerr_component, "chain50": chain}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--number", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = _backends()
    print("%-16s %-8s %12s" % ("workload", "backend", "us/call"))
    for name, fn in WORKLOADS.items():
        ref = None
        for bname, mod in backends.items():
            val = fn(mod)
            ref = val if ref is None else ref
            assert math.isclose(abs(val.value), abs(ref.value), rel_tol=1e-12)
            best = min(timeit.repeat(lambda: fn(mod), number=args.number, repeat=args.repeat))
            print("%-16s %-8s %12.2f" % (name, bname, 1e6 * best / args.number))


if __name__ == "__main__":
    main()
