"""Time the compiled and pure-Python angulation search kernels side by side.

    python3 benchmarks/bench_enum.py [--repeat 3]
"""

import argparse
import timeit

from clusterk0 import _enum_py
from clusterk0.polygon import PolygonModel, crossing_table, enumerate_diagonals

try:
    from clusterk0 import _enum_cy
except ImportError:
    _enum_cy = None

CELLS = [(1, 8), (1, 9), (2, 5), (2, 6), (3, 4), (4, 3)]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if _enum_cy is None:
        print("compiled kernel not built; timing the Python fallback only")
    print(f"{'d':>2} {'n':>3} {'W':>3} {'count':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for d, n in CELLS:
        m = PolygonModel(d, n)
        cross = crossing_table(enumerate_diagonals(m))
        count = _enum_py.count_angulations(cross, n)
        t_py = min(timeit.repeat(lambda: _enum_py.count_angulations(cross, n), number=1, repeat=args.repeat))
        if _enum_cy is not None:
            assert _enum_cy.count_angulations(cross, n) == count
            t_cy = min(timeit.repeat(lambda: _enum_cy.count_angulations(cross, n), number=1, repeat=args.repeat))
            print(f"{d:>2} {n:>3} {m.W:>3} {count:>9} {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>7.1f}x")
        else:
            print(f"{d:>2} {n:>3} {m.W:>3} {count:>9} {t_py:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
