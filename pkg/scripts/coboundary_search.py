"""Search small instances for r where the general coboundary conditions hold but the side conditions fail.

Scans the 2-dim non-abelian corpus and the 4-dim doubles built on it, with
every antisymmetric r whose entries have height at most ``--height``.
Prints a JSON summary; with ``--out`` writes it to a file as well.
"""

from __future__ import annotations

import argparse
import itertools
import json
import time
from fractions import Fraction

import numpy as np

from rbla.bialgebra import dualize_coproduct
from rbla.cybe import coboundary_conditions_general, coboundary_delta, side_conditions
from rbla.exact import LinearMap, qarray
from rbla.fixtures import na2_corpus
from rbla.lie import adjoint_rep, check_lie, dual_representation
from rbla.rota_baxter import RBLieAlgebra, check_admissible, semidirect_product_rb, standard_admissibles


def antisymmetric(n: int, height: int):
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for values in itertools.product(range(-height, height + 1), repeat=len(slots)):
        if not any(values):
            continue
        m = np.zeros((n, n), dtype=object) + Fraction(0)
        for (i, j), v in zip(slots, values):
            m[i, j], m[j, i] = Fraction(v), Fraction(-v)
        yield qarray(m)


def instances(doubles: bool, stride: int = 1):
    for e in na2_corpus()[::stride]:
        rb = e.rb()
        for k, Q in enumerate(standard_admissibles(rb)):
            yield f"na2[{e.weight}]{e.matrix} Q{k}", rb.with_Q(Q, verify=False)
            if not doubles:
                continue
            # g + g* with P + Q* and companion Q + P*
            rep = dual_representation(adjoint_rep(rb.lie)).with_ops(alpha=Q.T)
            d = semidirect_product_rb(rb, rep)
            n = rb.dim
            comp = np.zeros((2 * n, 2 * n), dtype=object) + Fraction(0)
            comp[:n, :n] = Q.matrix
            comp[n:, n:] = rb.P.matrix.T
            Qd = LinearMap(d.space, d.space, qarray(comp))
            if check_admissible(d, Qd).passed:
                yield f"double na2[{e.weight}]{e.matrix} Q{k}", d.with_Q(Qd, verify=False)


def search(height: int, doubles: bool, limit: int | None, stride: int = 1) -> dict:
    found, scanned, skipped = [], 0, 0
    start = time.perf_counter()
    for name, rb in itertools.islice(instances(doubles, stride), limit):
        for r in antisymmetric(rb.dim, height):
            s2, s3 = side_conditions(rb.P.matrix, rb.Q.matrix, r)
            if not np.count_nonzero(s2) and not np.count_nonzero(s3):
                continue
            if not check_lie(dualize_coproduct(coboundary_delta(rb.lie, r))).passed:
                skipped += 1
                continue
            scanned += 1
            if coboundary_conditions_general(rb, r).passed:
                found.append({"instance": name, "r": [[str(v) for v in row] for row in r]})
    return {"height": height, "doubles": doubles, "stride": stride, "scanned": scanned, "dual_not_lie": skipped,
            "found": len(found),
            "found_in_doubles": sum(f["instance"].startswith("double") for f in found), "examples": found[:10], "seconds": round(time.perf_counter() - start, 2)}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--height", type=int, default=2)
    ap.add_argument("--doubles", action="store_true", help="also scan the 4-dim doubles")
    ap.add_argument("--limit", type=int, default=None, help="stop after this many instances")
    ap.add_argument("--stride", type=int, default=1, help="use every k-th corpus member")
    ap.add_argument("--out")
    args = ap.parse_args()
    summary = search(args.height, args.doubles, args.limit, args.stride)
    text = json.dumps(summary, indent=2)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")


if __name__ == "__main__":
    main()
