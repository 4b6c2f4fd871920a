"""Compare the pure-Python and compiled crystal kernels.

    python benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

from crystal_fold.cartan import build_cartan
from crystal_fold.crystal import CrystalEngine
from crystal_fold.kernel import CKernel, PyKernel
from crystal_fold.weyl import longest_word

CASES = [
    ("demazure A3 (4,4,4)", "A3", "demazure", (4, 4, 4)),
    ("demazure B3 (2,2,2)", "B3", "demazure", (2, 2, 2)),
    ("demazure G2 (6,6)", "G2", "demazure", (6, 6)),
    ("star A3 depth 9", "A3", "star", 9),
    ("string param C3 depth 7", "C3", "param", 7),
]


def _workload(tag: str, kind: str, arg, kernel_cls):
    cartan = build_cartan(tag)
    word = longest_word(cartan)

    def run():
        eng = CrystalEngine(cartan, kernel_cls=kernel_cls)
        if kind == "demazure":
            return len(eng.enumerate_demazure(arg, word))
        elements = eng.enumerate_depth(arg)
        if kind == "star":
            return sum(len(eng.star(b).coords) for b in elements)
        return sum(sum(eng.string_param(b, word)) for b in elements)

    return run


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if CKernel is None:
        raise SystemExit("compiled kernel is not built; run pip install -e . first")
    print(f"{'case':28} {'python [s]':>11} {'compiled [s]':>13} {'speedup':>8}")
    for name, tag, kind, arg in CASES:
        py_run, c_run = _workload(tag, kind, arg, PyKernel), _workload(tag, kind, arg, CKernel)
        assert py_run() == c_run(), name
        t_py = min(timeit.repeat(py_run, number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(c_run, number=1, repeat=args.repeat))
        print(f"{name:28} {t_py:11.3f} {t_c:13.3f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
