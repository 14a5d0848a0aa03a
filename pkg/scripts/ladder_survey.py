"""Survey the bound ladder over a range of degrees.

Counts where the improved bound already meets the Pell value (as in the
N + 1 = square family) and reports the largest relative gaps.

    python scripts/ladder_survey.py --to 5000
"""

import argparse
from fractions import Fraction

from seshadri import full_report


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--from", dest="lo", type=int, default=2)
    parser.add_argument("--to", dest="hi", type=int, default=2000)
    parser.add_argument("--top", type=int, default=10)
    args = parser.parse_args()

    coincide = []
    gaps = []
    for n in range(args.lo, args.hi + 1):
        rep = full_report(n)
        if rep.szemberg is None:
            continue
        improved, conj = rep.szemberg.value, rep.conjectural
        if improved == conj:
            coincide.append(n)
        else:
            gaps.append(((conj - improved) / conj, n, improved, conj))

    print(f"non-square degrees where improved == Pell value: {len(coincide)}")
    print("  " + " ".join(map(str, coincide[:40])) + (" ..." if len(coincide) > 40 else ""))
    print(f"largest relative gaps (Pell - improved) / Pell:")
    for rel, n, improved, conj in sorted(gaps, reverse=True)[: args.top]:
        print(f"  N={n:<6} improved={str(improved):<14} pell={str(conj):<24} rel={float(rel):.4g}")


if __name__ == "__main__":
    main()
