"""Compare the multi-point lattice minima against floor(sqrt(N/r)).

Both constraint variants are shown; neither is claimed to bound anything.

    python scripts/multipoint_explore.py --max-n 20 --max-r 3 --pmax 4
"""

import argparse

from seshadri import multipoint_bound, multipoint_omega_min


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=16)
    parser.add_argument("--max-r", type=int, default=3)
    parser.add_argument("--pmax", type=int, default=4)
    args = parser.parse_args()

    print(f"{'N':>4} {'r':>2} {'floor':>5} {'N*min (literal)':>16} {'N*min (+1)':>12}")
    for r in range(2, args.max_r + 1):
        for n in range(1, args.max_n + 1):
            literal = multipoint_omega_min(n, r, args.pmax).minimum * n
            strict = multipoint_omega_min(n, r, args.pmax, strict=True).minimum * n
            print(f"{n:>4} {r:>2} {multipoint_bound(n, r):>5} {str(literal):>16} {str(strict):>12}")


if __name__ == "__main__":
    main()
