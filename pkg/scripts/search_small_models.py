#!/usr/bin/env python3
"""Scan small algebras for counterexamples to a catalog law.

Examples:

    python scripts/search_small_models.py AX.psbck6_antisym --max-size 4
    python scripts/search_small_models.py P3.isotone_unconditional --max-size 3
"""

import argparse
import sys

from psbe.algebra import serialize_algebra
from psbe.laws import BudgetExceeded, SearchSpec, catalog, search_counterexample


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("law", nargs="?", help="law id (omit to list the catalog)")
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--min-size", type=int, default=2)
    ap.add_argument("--iso-reject", action="store_true")
    ap.add_argument("--budget", type=int)
    args = ap.parse_args()

    if args.law is None:
        for law in catalog():
            probe = "  [probe]" if law.probe else ""
            print(f"{law.id:34s} {law.anchor}{probe}")
        return 0

    spec = SearchSpec(law=args.law, max_size=args.max_size,
                      min_size=args.min_size, iso_reject=args.iso_reject,
                      budget=args.budget)
    try:
        result = search_counterexample(spec)
    except BudgetExceeded as exc:
        print(f"budget exhausted after {exc.result.visited} candidates",
              file=sys.stderr)
        return 0
    print(f"visited {result.visited} candidate table pairs "
          f"{dict(sorted(result.visited_by_size.items()))}")
    if result.found is None:
        print(f"no counterexample to {args.law} up to size {args.max_size}")
        return 0
    alg, pair, witness = result.found
    print(f"counterexample at size {alg.size}, witness "
          f"{[alg.element_names[x] for x in witness] if witness else witness}")
    if pair is not None:
        alg = alg.with_unary(exists=pair.exists, forall=pair.forall)
    print(serialize_algebra(alg), end="")
    return 1


if __name__ == "__main__":
    sys.exit(main())
