"""Compare the m mod 4 table for cond3 with exact C_(3), C_(1,1,1) parities.

Prints every disagreement, then a per-m summary, and checks that the
parity formula keeping the sigma3 term matches the exact predicate.

    python3 scripts/cond3_table.py --max-m 6 --max-degree 6
"""
import argparse
from collections import Counter

from incompress.checks import complete_intersections
from incompress.criteria import cond3_check


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()

    total, bad, parity_bad = Counter(), Counter(), 0
    for X in complete_intersections(3, args.max_m, args.max_degree, dims=[3]):
        c = cond3_check(X)
        total[X.m] += 1
        if c["predicate"] != c["table_case"]:
            bad[X.m] += 1
            print(f"{X}  s1={X.sigma1} s2={X.sigma2} s3={X.sigma3}  "
                  f"C_111={c['C_111']} C_3={c['C_3']}  exact={c['predicate']} "
                  f"table={c['table_case']}")
        parity_bad += c["predicate"] != c["parity_with_sigma3"]

    print()
    print(" m  cases  table disagreements")
    for m in sorted(total):
        print(f"{m:>2}  {total[m]:>5}  {bad[m]:>5}")
    print(f"parity formula with sigma3: {parity_bad} disagreements")


if __name__ == "__main__":
    main()
