"""Compiled vs pure-Python kernels on the workloads that dominate runtime.

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import timeit

from treestars import _pykernels, kernels
from treestars.counting import _csr
from treestars.tk import construct_tk
from treestars.treegen import level_sequence_csr, level_sequences


def _search_workload(n):
    csrs = [level_sequence_csr(s) for s in level_sequences(n)]

    def run(mod):
        return [mod.star_matrix(ip, ix) for ip, ix in csrs]

    return f"star matrices, all {len(csrs)} trees n={n}", run


def _tk_workload(k):
    ip, ix = _csr(construct_tk(k)[0])
    return f"star matrix T_{k} (n={len(ip) - 1})", lambda mod: mod.star_matrix(ip, ix)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="small sizes, one repeat")
    args = ap.parse_args(argv)
    if kernels._ckernels is None:
        print("compiled kernels unavailable; build the extension first")
        return 1
    ns, ks, repeat = ([10], [3], 1) if args.quick else ([14, 15], [8, 14], 3)
    workloads = [_search_workload(n) for n in ns] + [_tk_workload(k) for k in ks]
    print(f"{'workload':<40} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, run in workloads:
        # results must agree before timings mean anything
        assert run(_pykernels) == run(kernels._ckernels), label
        py = min(timeit.repeat(lambda: run(_pykernels), number=1, repeat=repeat))
        cy = min(timeit.repeat(lambda: run(kernels._ckernels), number=1, repeat=repeat))
        print(f"{label:<40} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
