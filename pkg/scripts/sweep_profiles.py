"""Sweep random simple arrangements and tabulate the event-dimension profiles.

For Euclidean arrangements the profile is always C(n,d) events of dimension d,
then C(n,d-1) of dimension d-1, and so on. For chords in the disk it need not
be monotone; the script reports how often it is not.
"""

import argparse
import random
from collections import Counter
from fractions import Fraction

from maxclass.arrangement import KLEIN, Arrangement, run_sweep, validate


def random_arrangement(rng, dim, n, kind):
    while True:
        normals = [tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(dim)) for _ in range(n)]
        if kind == KLEIN:
            offsets = [Fraction(rng.randint(-7, 7), 8) * max(abs(c) for c in nrm) for nrm in normals]
        else:
            offsets = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
        try:
            A = Arrangement.from_lists(normals, offsets, kind)
        except ValueError:
            continue
        if validate(A):
            return A


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kind", choices=["euclidean", KLEIN], default="euclidean")
    ap.add_argument("--dim", type=int, default=2)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    profiles = Counter()
    for t in range(args.trials):
        A = random_arrangement(rng, 2 if args.kind == KLEIN else args.dim, args.n, args.kind)
        seq, _ = run_sweep(A, seed=t)
        profiles[tuple(e.cube_dim for e in seq.events)] += 1
    for prof, k in profiles.most_common():
        monotone = all(a >= b for a, b in zip(prof, prof[1:]))
        print(f"{k:>4}  {'monotone' if monotone else 'interleaved':<11}  {list(prof)}")


if __name__ == "__main__":
    main()
