"""Sweep every (p, q) on random integer-root instances and tabulate branch hits.

    python scripts/theorem1_sweep.py --max-m 5 --max-n 5 --seeds 5
"""

import argparse
import collections
import json
import time

from sylvsum.verify import SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--range", type=int, default=20)
    ap.add_argument("--all-shapes", action="store_true", help="include m > n through the swap symmetry")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", help="write every report to this file")
    args = ap.parse_args()

    cfg = SuiteConfig(args.max_m, args.max_n, args.seeds, args.range, m_le_n=not args.all_shapes)
    start = time.perf_counter()
    res = run_suite(cfg, workers=args.jobs)
    elapsed = time.perf_counter() - start

    hits = collections.Counter(r.branch for r in res.reports)
    fails = collections.Counter(r.branch for r in res.reports if not r.passed)
    print(f"{'branch':<14}{'cases':>8}{'failures':>10}")
    for branch in sorted(hits):
        print(f"{branch:<14}{hits[branch]:>8}{fails[branch]:>10}")
    print(f"total {len(res.reports)} cases in {elapsed:.2f}s, {len(res.failures)} failures")
    for r in res.failures:
        print("FAIL", json.dumps(r.to_json_obj()))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(res.to_json_obj(), fh)
    raise SystemExit(0 if res.ok else 1)


if __name__ == "__main__":
    main()
