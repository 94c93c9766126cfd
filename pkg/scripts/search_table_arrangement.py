"""Search for four lines whose cells are the 11-row table class and whose sweep
starts with the published prefix v7, v8, v5, v9, v2, v0."""

import argparse
import json
import random
from fractions import Fraction

from maxclass.arrangement import Arrangement, Hyperplane, arrangement_to_json, cells, sweep, validate
from maxclass.concepts import format_concept
from maxclass.errors import GenericityError
from maxclass.fixtures import FIXTURES, SWEEP_PREFIX

# axis directions, slightly tilted so that no two crossings tie
DIRECTIONS = [
    (Fraction(a) + b, Fraction(c) + e)
    for a, c in [(1, 0), (-1, 0), (0, 1), (0, -1)]
    for t in (Fraction(1, 50), Fraction(-1, 50))
    for b, e in [((0, t) if a else (t, 0))]
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tries", type=int, default=200000)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    target = FIXTURES["table-euclidean"].cls
    for _ in range(args.tries):
        planes = tuple(
            Hyperplane((rng.randint(-3, 3), rng.randint(-3, 3)), rng.randint(-4, 4)) for _ in range(4)
        )
        A = Arrangement(2, planes)
        if not validate(A):
            continue
        C, _ = cells(A)
        if C != target:
            continue
        for g in DIRECTIONS:
            try:
                seq = sweep(A, g, max_retries=1)
            except GenericityError:
                continue
            if tuple(format_concept(v, 4) for v in seq.vertices[:6]) == SWEEP_PREFIX:
                print(json.dumps({"arrangement": arrangement_to_json(A), "direction": [str(c) for c in g]}))
                return


if __name__ == "__main__":
    main()
