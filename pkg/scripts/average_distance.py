"""Average distance between two vertices of SG_n, scaled by 2^n.

Small n are exact (all pairs by BFS); larger n are sampled with the automaton.
"""

import argparse

from hanoigasket import analysis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--exact-max", type=int, default=6)
    ap.add_argument("--sampled", type=int, nargs="+", default=[10, 20, 40])
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"limit 466/885 = {466 / 885:.5f}")
    for n in range(1, args.exact_max + 1):
        avg = analysis.average_pair_distance(n, "exact")
        print(f"n={n:<3} exact    ratio={float(avg.ratio):.5f}")
    for n in args.sampled:
        avg = analysis.average_pair_distance(n, "sampled", args.samples, args.seed)
        print(f"n={n:<3} sampled  ratio={float(avg.ratio):.5f}")


if __name__ == "__main__":
    main()
