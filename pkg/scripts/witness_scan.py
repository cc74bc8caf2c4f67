"""Seeded scan for small-dimension families satisfying the relation system.

For each n the smallest d found is compared with the floor ceil(3n/2).
"""

import argparse
import json

from mcg_forge.relations import witness_search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--per-d", type=int, default=256)
    args = ap.parse_args()
    for n in range(1, args.n_max + 1):
        r = witness_search(n, 2 * n, args.seed, random_per_d=args.per_d)
        print(json.dumps({"n": n, "floor": r.floor, "best_d": r.best_d,
                          "meets_floor": r.meets_floor, "checked": r.candidates_checked}))


if __name__ == "__main__":
    main()
