#!/usr/bin/env python3
"""Build the special L-dendriform bialgebra families round by round and check each one.

Each round produces four bialgebras from the current weight-zero Rota-Baxter
Lie algebra (g, P), then replaces g by the sub-adjacent algebra of the induced
pre-Lie product. Prints the sub-adjacent bracket of every round and one
verdict line per bialgebra.

    python scripts/iterate_family.py [--rounds 3] [--doc tests/fixtures/docs/fix_sl2.json]
"""

import argparse
import time
from pathlib import Path

from rbla.bialgebra import check_sld_bialgebra
from rbla.cybe import iterate_family
from rbla.document import load
from rbla.exact import format_combination
from rbla.lie import LieAlgebra
from rbla.prelie import induce_prelie, subadjacent_rb
from rbla.rota_baxter import RBLieAlgebra

DEFAULT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "docs" / "fix_sl2.json"


def brackets(rb: RBLieAlgebra) -> str:
    b, c = rb.space.basis, rb.lie.c
    parts = [f"[{b[i]},{b[j]}]={format_combination(c[i, j], b)}"
             for i in range(len(b)) for j in range(i + 1, len(b))]
    return "  ".join(parts)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--rounds", type=int, default=2)
    ap.add_argument("--doc", default=str(DEFAULT))
    args = ap.parse_args()

    doc = load(args.doc)
    rb = RBLieAlgebra(LieAlgebra(doc.products["bracket"]), doc.weight or 0, doc.operators["P"])

    current = rb
    for k in range(args.rounds):
        print(f"round {k}: {brackets(current)}")
        current = subadjacent_rb(induce_prelie(current), 0, current.P)

    start = time.perf_counter()
    family = iterate_family(rb, rounds=args.rounds)
    built = time.perf_counter() - start
    failed = 0
    for name, b in family:
        t = time.perf_counter()
        ok = check_sld_bialgebra(b).passed
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:<22} dim {b.space.dim}  {time.perf_counter() - t:.2f} s")
    print(f"{len(family)} bialgebras built in {built:.2f} s, {failed} failed")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
