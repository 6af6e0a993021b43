"""Benchmark comparing the compiled kernel core against the pure-Python
fallback on the hot paths.  Run as ``python -m rigmat.bench`` or
``rigmat bench``."""

from __future__ import annotations

import time

from rigmat._kernels import backends
from rigmat.graphcore import complete_graph, petersen_graph, prism_graph


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases():
    k7u, k7v = complete_graph(7).edge_arrays()
    pu, pv = prism_graph().edge_arrays()
    pet = petersen_graph()
    pet_adj = pet.adjacency_bits()
    irr2 = [1, 0, 0, 1, 1, 1] + [0] * 34  # x^40 + x^5 + x^4 + x^3 + 1
    return [
        ("pebble_rank K7 x200", lambda m: [m.pebble_rank(7, k7u, k7v) for _ in range(200)]),
        ("laman_ok K7 x200", lambda m: [m.laman_ok(7, k7u, k7v) for _ in range(200)]),
        ("agree_scan n=4", lambda m: m.agree_scan(4)),
        ("hmat_rank_modp prism x200",
         lambda m: [m.hmat_rank_modp(6, pu, pv, (1 << 61) - 1, s) for s in range(200)]),
        ("hmat_rank_gf(2^40) prism x20",
         lambda m: [m.hmat_rank_gf(6, pu, pv, 2, 40, irr2, s) for s in range(20)]),
        ("wedge_rank_modp K7 x50",
         lambda m: [m.wedge_rank_modp(7, 5, k7u, k7v, (1 << 61) - 1, s) for s in range(50)]),
        ("bernstein_search petersen x20",
         lambda m: [m.bernstein_search(10, pet_adj) for _ in range(20)]),
        ("cubic_scan n=8", lambda m: m.cubic_scan(8)),
    ]


def run(repeat: int = 3) -> None:
    impls = backends()
    names = sorted(impls)
    header = f"{'kernel':34s}" + "".join(f"{n:>12s}" for n in names)
    if len(names) > 1:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for label, case in _cases():
        times = {}
        for name in names:
            mod = impls[name]
            times[name] = _time(lambda: case(mod), repeat)
        row = f"{label:34s}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in names)
        if "c" in times and "python" in times and times["c"] > 0:
            row += f"{times['python'] / times['c']:>9.1f}x"
        print(row)
    if len(names) == 1:
        print("\ncompiled kernels unavailable; showing pure-Python timings only")


if __name__ == "__main__":
    run()
