"""Construction-time scaling of the full cover-tree build.

Doubling the input should roughly double the build time. Pass --big to
run the million-symbol sizes used by the acceptance suite; the default
sizes keep the demo quick.
"""

import sys

from coverst.bench import FAMILIES, bench_family, warmup

sizes = [250_000, 500_000] if "--big" not in sys.argv else [1_000_000, 2_000_000]

print("JIT warm-up ...")
warmup()

for family in FAMILIES:
    rows, ratios = bench_family(family, sizes, repeats=2)
    totals = {n: ns / 1e9 for (_, n, phase, ns) in rows if phase == "total"}
    print(f"\n{family}:")
    for n in sizes:
        print(f"  n = {n:>9,d}: {totals[n] * 1e3:8.0f} ms")
        slowest = sorted(
            ((ns, ph) for (_, m, ph, ns) in rows if m == n and ph != "total"),
            reverse=True,
        )[:3]
        for ns, ph in slowest:
            print(f"      {ph:<14s} {ns / 1e6:8.0f} ms")
    for n, r in ratios:
        print(f"  time ratio at n = {n:,d}: {r:.2f}  (2.0 would be perfectly linear)")
