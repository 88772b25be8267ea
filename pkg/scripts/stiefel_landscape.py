"""Print a grid of Stiefel-projection verdicts and tally the undecided cases.

    python scripts/stiefel_landscape.py --k-max 12 --r-max 40
"""
import argparse
from collections import Counter

from looseness.stiefel import decide_stiefel
from looseness.verdict import Outcome

SYMBOL = {Outcome.LOOSE: "L", Outcome.NOT_LOOSE: "x", Outcome.UNKNOWN: "?"}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k-max", type=int, default=12)
    parser.add_argument("--r-max", type=int, default=40)
    args = parser.parse_args()

    tally = Counter()
    reasons = Counter()
    print("k\\r " + "".join(f"{r % 10}" for r in range(2, args.r_max + 1)))
    for k in range(1, args.k_max + 1):
        row = []
        for r in range(2, args.r_max + 1):
            if r <= k:
                row.append(" ")
                continue
            verdict = decide_stiefel(r, k)
            tally[verdict.outcome] += 1
            if verdict.outcome is Outcome.UNKNOWN:
                reasons[verdict.trace[-1].computed["reason"].split(":")[0]] += 1
            row.append(SYMBOL[verdict.outcome])
        print(f"{k:>3} " + "".join(row))
    print()
    for outcome in Outcome:
        print(f"{outcome.value:<9} {tally[outcome]}")
    for reason, count in reasons.most_common():
        print(f"  unknown, {reason}: {count}")


if __name__ == "__main__":
    main()
