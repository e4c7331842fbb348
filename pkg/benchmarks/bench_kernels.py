"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 20]
"""
import argparse
import timeit

import numpy as np

from vans import _kernels_py

try:
    from vans import _kernels
except ImportError:
    _kernels = None


def cases(seed=0):
    g = np.random.default_rng(seed)
    logits = g.normal(size=(200, 40))
    logp = np.ascontiguousarray(logits - np.log(np.exp(logits).sum(1, keepdims=True)))
    target = g.integers(1, 40, size=30).astype(np.int64)
    ref = g.integers(0, 500, size=60).astype(np.int64)
    hyp = g.integers(0, 500, size=55).astype(np.int64)
    return {
        "ctc_loss_grad T=200 V=40 L=30": lambda m: m.ctc_loss_grad(logp, target),
        "edit_ops 60x55 tokens": lambda m: m.edit_ops(ref, hyp),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=20)
    args = p.parse_args(argv)
    backends = {"python": _kernels_py}
    if _kernels is not None:
        backends["cython"] = _kernels
    else:
        print("compiled backend not built; timing the fallback only")
    print(f"{'kernel':34s} " + " ".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in cases().items():
        times = {b: min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat)) for b, m in backends.items()}
        speed = f"{times['python'] / times['cython']:10.1f}x" if "cython" in times else ""
        print(f"{name:34s} " + " ".join(f"{t * 1e3:10.3f}ms" for t in times.values()) + " " + speed)


if __name__ == "__main__":
    main()
