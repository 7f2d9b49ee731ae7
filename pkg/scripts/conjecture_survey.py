"""Tabulate areg against longest induced / admissible path orders over a corpus.

Reports counts only; nothing is asserted.
"""

import argparse
from collections import Counter

from beisym.corpus import load_corpus
from beisym.invariants import conjecture_report


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", default="all-connected:5")
    parser.add_argument("--show", type=int, default=5, help="example graphs to print per outcome")
    args = parser.parse_args()

    tallies = {"gin": Counter(), "inid": Counter()}
    samples = {}
    for g in load_corpus(args.corpus):
        for row in conjecture_report(g):
            outcome = "=" if row.areg == row.path_order else ("<" if row.areg < row.path_order else ">")
            tallies[row.kind][outcome] += 1
            samples.setdefault((row.kind, outcome), []).append(f"{row.graph} areg={row.areg} path={row.path_order}")

    for kind, label in (("gin", "areg(gin) vs longest induced path"), ("inid", "areg(in) vs longest admissible path")):
        t = tallies[kind]
        print(f"{label}: = {t['=']}  < {t['<']}  > {t['>']}")
        for outcome in "<>":
            for line in samples.get((kind, outcome), [])[: args.show]:
                print(f"  {outcome} {line}")


if __name__ == "__main__":
    main()
