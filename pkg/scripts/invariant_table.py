"""Tabulate chi, Todd numbers, u_p and verdicts for small complete intersections.

    python3 scripts/invariant_table.py --max-dim 4 --max-m 2 --max-degree 4
"""
import argparse

from incompress.checks import SweepConfig, complete_intersections, run_all
from incompress.criteria import build_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-dim", type=int, default=3)
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--checks", action="store_true", help="also run the full sweep")
    args = ap.parse_args()

    for X in complete_intersections(args.max_dim, args.max_m, args.max_degree):
        r = build_report(X)
        ups = " ".join(f"u_{p}={d.u_p}" for p, d in r.per_prime.items())
        fired = [v.criterion for v in r.verdicts if v.verdict.value == "incompressible-proven"]
        print(f"{str(X):<32} dim={X.dim} chi={r.chi:<6} {ups:<40} {','.join(fired) or '-'}")

    if args.checks:
        cfg = SweepConfig()
        for res in run_all(cfg):
            status = "ok" if res.passed else f"{len(res.failures)} FAIL"
            print(f"{res.name:<40} {res.cases:>6} {status:>8} {res.seconds:6.2f}s")


if __name__ == "__main__":
    main()
