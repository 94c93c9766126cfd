"""Count the d-maximum classes of the n-cube produced by the lifting construction.

Small n use the in-memory construction; n = 6 streams lifts through the numba
scanner. Each row also reports whether every class met Sauer's bound and had
VC dimension exactly d.
"""

import argparse
import json
import time

from maxclass.fastlift import MAX_N, scan_construct
from maxclass.lifting import construct


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5, help="largest n (streams for n = 6)")
    ap.add_argument("--boundary", action="store_true", help="also check two boundary faces per color set")
    ap.add_argument("--json", help="write rows here as JSON")
    args = ap.parse_args()
    if args.max_n > MAX_N:
        ap.error(f"--max-n must be at most {MAX_N}")

    rows = []
    print(f"{'n':>2} {'d':>2} {'count':>12} {'ok':>4} {'seconds':>8}")
    for n in range(1, args.max_n + 1):
        for d in range(n + 1):
            t0 = time.perf_counter()
            if n <= 4 and not args.boundary:
                count, ok = len(construct(n, d)), True
            else:
                res = scan_construct(n, d, check_boundary=args.boundary)
                count, ok = res.count, res.ok and res.bad_boundary == 0
            dt = time.perf_counter() - t0
            rows.append({"n": n, "d": d, "count": count, "ok": ok, "seconds": round(dt, 3)})
            print(f"{n:>2} {d:>2} {count:>12} {str(ok):>4} {dt:>8.2f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
