#!/usr/bin/env python3
"""Regenerate the reference reports for every bundled fixture.

For each bundled algebra this prints the classification flags, the
enumerated monadic operator pairs, the deductive systems and the law
suite summary.  Run from anywhere after installing the package:

    python scripts/reproduce_fixture_reports.py [--json]
"""

import argparse
import json
import sys
from pathlib import Path

import psbe
from psbe.algebra import load_algebra
from psbe.classify import classify
from psbe.deduction import enumerate_ds, monadic_ds
from psbe.laws import FAILS, verify_suite
from psbe.quantifiers import enumerate_mop, fixed_set

FIXDIR = Path(psbe.__file__).resolve().parent / "fixtures"


def names(alg, xs):
    return " ".join(alg.element_names[x] for x in sorted(xs))


def report(alg):
    doc = {"algebra": alg.name, "size": alg.size}
    rep, _ = classify(alg)
    doc["flags"] = sorted(f for f, v in rep.flags.items() if v.status == "holds")
    pairs = enumerate_mop(alg)
    doc["mop"] = [{"exists": list(p.exists.images), "forall": list(p.forall.images),
                   "fixed": names(alg, fixed_set(alg, p)[0])} for p in pairs]
    all_ds = enumerate_ds(alg)
    doc["ds"] = [{"members": names(alg, d.members), "normal": d.normal}
                 for d in all_ds]
    doc["mds_per_pair"] = [
        [names(alg, d.members) for d in monadic_ds(alg, p, all_ds)]
        for p in pairs]
    verdicts = verify_suite(alg, pairs)
    doc["laws"] = {"verdicts": len(verdicts),
                   "failures": sum(v.status == FAILS for v in verdicts),
                   "instances": sum(v.instances for v in verdicts)}
    return doc


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    docs = [report(load_algebra(p)) for p in sorted(FIXDIR.glob("*.alg"))]
    if args.json:
        json.dump(docs, sys.stdout, indent=2, sort_keys=True)
        print()
        return
    for doc in docs:
        print(f"== {doc['algebra']} ({doc['size']} elements)")
        print("   flags:", ", ".join(doc["flags"]))
        print(f"   MOP: {len(doc['mop'])} pairs")
        for i, p in enumerate(doc["mop"], start=1):
            print(f"     pair {i}: forall={p['forall']}  fixed={{{p['fixed']}}}")
        for entry in doc["ds"]:
            tag = " (normal)" if entry["normal"] else ""
            print(f"   ds {entry['members']}{tag}")
        laws = doc["laws"]
        print(f"   laws: {laws['verdicts']} verdicts, {laws['failures']} "
              f"failures, {laws['instances']} instances")


if __name__ == "__main__":
    main()
