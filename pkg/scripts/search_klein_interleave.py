"""Search small Klein-disk chord arrangements whose sweep interleaves cube dimensions.

Prints the first few hits as arrangement JSON together with the event dims.
"""

import argparse
import json
import random
from fractions import Fraction

from maxclass.arrangement import Arrangement, Hyperplane, arrangement_to_json, sweep_klein, validate
from maxclass.errors import ArrangementError


def random_chords(rng: random.Random, n: int) -> Arrangement:
    planes = []
    for _ in range(n):
        normal = (Fraction(rng.randint(-6, 6), 4), Fraction(rng.randint(-6, 6), 4))
        planes.append(Hyperplane(normal, Fraction(rng.randint(-3, 3), 8)))
    return Arrangement(2, tuple(planes), "klein_disk", 2)


def interleaves(dims) -> bool:
    return any(a < b for a, b in zip(dims, dims[1:]))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--hits", type=int, default=3)
    ap.add_argument("--tries", type=int, default=20000)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    hits = 0
    for _ in range(args.tries):
        A = random_chords(rng, args.n)
        if not validate(A):
            continue
        try:
            seq = sweep_klein(A)
        except ArrangementError:
            continue
        if interleaves(seq.dims):
            print(json.dumps({"arrangement": arrangement_to_json(A), "dims": seq.dims}))
            hits += 1
            if hits == args.hits:
                break


if __name__ == "__main__":
    main()
