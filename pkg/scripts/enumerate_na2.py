#!/usr/bin/env python3
"""Enumerate Rota-Baxter operators on the 2-dim non-abelian Lie algebra [e1, e2] = e1.

Integer matrices P = [[a, b], [c, d]] with entries in [-BOUND, BOUND] are
tested for weights 0, 1, -1 by expanding the operator identity on the single
basis pair (e1, e2) with plain integers. The closed form
    -bc - a^2 - lam a = 0  and  c (a + d + lam) = 0
is checked against the expansion for every candidate.

    python scripts/enumerate_na2.py [--out src/rbla/data/na2_corpus.json]
"""

import argparse
import itertools
import json
from pathlib import Path

BOUND = 2
WEIGHTS = (0, 1, -1)


def bracket(u, v):
    # [u, v] = (u1 v2 - u2 v1) e1
    return (u[0] * v[1] - u[1] * v[0], 0)


def apply(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def defect(m, lam):
    e1, e2 = (1, 0), (0, 1)
    p1, p2 = apply(m, e1), apply(m, e2)
    lhs = bracket(p1, p2)
    inner = [a + b + lam * c for a, b, c in zip(bracket(p1, e2), bracket(e1, p2), bracket(e1, e2))]
    rhs = apply(m, inner)
    return (lhs[0] - rhs[0], lhs[1] - rhs[1])


def closed_form(m, lam):
    (a, b), (c, d) = m
    return -b * c - a * a - lam * a == 0 and c * (a + d + lam) == 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "src/rbla/data/na2_corpus.json"))
    args = ap.parse_args()

    found = []
    rng = range(-BOUND, BOUND + 1)
    for lam in WEIGHTS:
        for a, b, c, d in itertools.product(rng, repeat=4):
            m = ((a, b), (c, d))
            ok = defect(m, lam) == (0, 0)
            if ok != closed_form(m, lam):
                raise SystemExit(f"expansion and closed form disagree at {m}, weight {lam}")
            if ok:
                found.append({"weight": str(lam), "matrix": [list(r) for r in m]})
    counts = {str(lam): sum(e["weight"] == str(lam) for e in found) for lam in WEIGHTS}
    doc = {
        "format": "rbla-corpus/1",
        "algebra": "[e1,e2]=e1",
        "entry_bound": BOUND,
        "weights": [str(w) for w in WEIGHTS],
        "counts": counts,
        "operators": found,
    }
    Path(args.out).write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {len(found)} operators {counts} to {args.out}")


if __name__ == "__main__":
    main()
