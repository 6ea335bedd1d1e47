"""Symbol reads of the automaton against the both-alternatives baseline."""

import argparse

from hanoigasket.cli import bench


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 100, 1000])
    ap.add_argument("--samples", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'n':>6} {'machine':>10} {'baseline':>12} {'ratio':>7} {'speedup':>8}")
    for n in args.sizes:
        r = bench(n, args.samples, args.seed)
        speed = r["baseline_seconds"] / r["machine_seconds"]
        print(f"{n:>6} {r['machine_symbol_reads']:>10} {r['baseline_symbol_reads']:>12} "
              f"{r['ratio']:>7.3f} {speed:>7.1f}x")


if __name__ == "__main__":
    main()
