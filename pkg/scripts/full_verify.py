"""Run every identity check (not only the theorem) and summarise by check name.

    python scripts/full_verify.py --max 6 --seeds 1 --jobs 4
    python scripts/full_verify.py --max 4 --prime 2305843009213693951
"""

import argparse
import collections
import json
import time

from sylvsum.verify import SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=5, help="largest m and n")
    ap.add_argument("--seeds", type=int, default=1)
    ap.add_argument("--prime", type=int, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    cfg = SuiteConfig(args.max, args.max, args.seeds, m_le_n=False, full=True, prime=args.prime)
    start = time.perf_counter()
    res = run_suite(cfg, workers=args.jobs)
    elapsed = time.perf_counter() - start

    counts = collections.Counter(c.name.split(":")[0] for c in res.checks)
    bad = collections.Counter(c.name.split(":")[0] for c in res.checks if not c.passed)
    counts["theorem"] = len(res.reports)
    bad["theorem"] = sum(not r.passed for r in res.reports)
    for name in sorted(counts):
        print(f"{name:<22}{counts[name]:>7}{bad[name]:>5}")
    print(f"{sum(counts.values())} checks in {elapsed:.1f}s, {len(res.failures)} failures")
    for f in res.failures[:20]:
        print("FAIL", json.dumps(f.to_json_obj(), default=str))
    raise SystemExit(0 if res.ok else 1)


if __name__ == "__main__":
    main()
