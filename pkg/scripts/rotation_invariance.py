"""Compare intersection data of the main curve system under two rotation systems.

Prints one JSON line per genus with the number of differing entries.
"""

import argparse
import json

from mcg_forge.scenarios import evaluate, main_family


def signature(report):
    return {(tuple(c["pair"]), c["kind"]): c["computed"] for c in report["checks"]}, \
        [c["computed"] for c in report["connectivity"]]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--genus-max", type=int, default=6)
    args = ap.parse_args()
    for g in range(3, args.genus_max + 1):
        (a, ca), (b, cb) = (signature(evaluate(main_family(g, rot))) for rot in ("circle", "twisted"))
        diff = sorted(k for k in a if a[k] != b.get(k))
        print(json.dumps({"g": g, "entries": len(a), "differing": len(diff),
                          "differing_constrained": [list(k[0]) for k in diff][:10],
                          "connectivity_equal": ca == cb}))


if __name__ == "__main__":
    main()
