"""Monte Carlo stopping time of the decision automaton vs the exact limit."""

import argparse
from fractions import Fraction

from hanoigasket import analysis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--samples", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    stats = analysis.simulate_stopping_time(args.n, args.samples, args.seed, workers=args.workers)
    limit = Fraction(63, 38)
    print(f"mean core reads   {stats.mean:.6f} +- {stats.stderr:.6f}")
    print(f"limit             {float(limit):.6f} ({limit})")
    print(f"exact at n={args.n:<5}  {float(analysis.expected_reads_finite(args.n)):.6f}")
    tails = analysis.tail_fractions(12, 10)
    for k, frac in tails.items():
        print(f"  P(reads > {k:>2}) = {float(frac):.6f}"
              f"   bound {(7 / 9) ** (k - 1):.6f}")


if __name__ == "__main__":
    main()
