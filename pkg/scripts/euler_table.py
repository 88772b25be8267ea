"""Tabulate chi(G_{r,k}) by the closed formula and check it against the Schubert cell count.

    python scripts/euler_table.py --r-max 16
"""
import argparse

from looseness.grassmann import euler_grassmann, euler_schubert_oracle


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--r-max", type=int, default=16)
    args = parser.parse_args()

    mismatches = 0
    for r in range(1, args.r_max + 1):
        values = []
        for k in range(0, r + 1):
            chi = euler_grassmann(r, k)
            if chi != euler_schubert_oracle(r, k):
                mismatches += 1
            values.append(str(chi))
        print(f"r={r:>3}: " + " ".join(values))
    print(f"mismatches against the Schubert oracle: {mismatches}")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
