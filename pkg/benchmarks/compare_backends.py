"""Compare the compiled kernel against the pure-Python fallback.

The kernel backend is chosen at import time, so each backend runs in a
fresh subprocess.  Both must produce identical per-level counts; the
table reports wall time per level and the resulting speedup.

    python benchmarks/compare_backends.py --hexagons 9
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

_CHILD_SNIPPET = """
import json, time
import bechex
from bechex.enumeration import SearchConfig, run_search
t0 = time.perf_counter()
reports = run_search(SearchConfig(h_max={h}))
dt = time.perf_counter() - t0
print(json.dumps({{
    "backend": bechex.BACKEND,
    "seconds": dt,
    "counts": [r.count for r in reports],
}}))
"""


def _run(h: int, pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["BECHEX_PURE"] = "1"
    else:
        env.pop("BECHEX_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", _CHILD_SNIPPET.format(h=h)],
        env=env,
        check=True,
        capture_output=True,
        text=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--hexagons", type=int, default=9, metavar="H")
    args = parser.parse_args()

    fast = _run(args.hexagons, pure=False)
    pure = _run(args.hexagons, pure=True)
    if fast["counts"] != pure["counts"]:
        raise SystemExit(
            f"backend disagreement: {fast['counts']} vs {pure['counts']}"
        )

    print(f"h_max = {args.hexagons}, counts = {fast['counts']}")
    print(f"{fast['backend']:>8s}: {fast['seconds']:8.2f} s")
    print(f"{pure['backend']:>8s}: {pure['seconds']:8.2f} s")
    if fast["backend"] != pure["backend"]:
        print(f" speedup: {pure['seconds'] / fast['seconds']:8.1f} x")
    else:
        print(" (compiled kernel unavailable; both runs used the fallback)")


if __name__ == "__main__":
    main()
