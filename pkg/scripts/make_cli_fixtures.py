#!/usr/bin/env python3
"""Write the CLI fixture documents used by the exit-code matrix in tests/.

Valid documents are serialized from the reference structures; malformed ones
are written by hand so that each trips exactly one parser rule.

    python scripts/make_cli_fixtures.py [--out tests/fixtures/docs]
"""

import argparse
import json
from pathlib import Path

from rbla import cybe
from rbla.bialgebra import induce_sld_bialgebra
from rbla.document import RepSpec, StructureDocument, serialize, to_json
from rbla.exact import LinearMap, Space
from rbla.fixtures import SL2_PHAT, SL2_PRELIE, SL2_TRI_L, na2, sl2, sl2_form, sl2_operator, sl2_rb
from rbla.lie import BilinearProduct, adjoint_rep
from rbla.prelie import induce_prelie

ROOT = Path(__file__).resolve().parents[1]


def sl2_doc(**extra) -> StructureDocument:
    g = sl2()
    doc = StructureDocument(g.space, weight=0)
    doc.products["bracket"] = g.bracket
    doc.operators["P"] = sl2_operator()
    doc.operators["Q"] = -sl2_operator()
    doc.forms["B"] = sl2_form()
    for k, v in extra.items():
        setattr(doc, k, v)
    return doc


def published() -> dict:
    return {
        "circ": {f"{a},{b}": v for (a, b), v in SL2_PRELIE.items()},
        "Phat": dict(SL2_PHAT),
        "tri_l": {f"{a},{b}": v for (a, b), v in SL2_TRI_L.items()},
    }


def valid_documents() -> dict[str, StructureDocument | dict]:
    out: dict = {}
    out["fix_sl2"] = sl2_doc(published=published(),
                             notes=["sl(2) with the weight-zero operator P and its form B"])
    out["sl2_plain"] = sl2_doc()

    rb = sl2_rb()
    pre = StructureDocument(rb.space, weight=0)
    pre.products["circ"] = induce_prelie(rb).circ
    pre.operators["P"] = sl2_operator()
    out["sl2_prelie"] = pre

    inst = cybe.OOperatorInstance(rb, adjoint_rep(rb.lie, alpha=rb.P), rb.P)
    sol = cybe.lift_O_operator(inst, -rb.P, -rb.P)
    chain = StructureDocument(Space("d", sol.rb.space.basis), weight=0)
    chain.products["bracket"] = sol.rb.lie.bracket
    chain.operators["P"] = sol.rb.P
    chain.operators["Q"] = sol.Q
    chain.tensors["r"] = sol.r
    chain.coproducts["delta"] = cybe.coboundary_delta(sol.rb.lie, sol.r)
    out["sl2_chain_bialgebra"] = chain

    b = cybe.build_coboundary_rb_bialgebra(sol)
    s = induce_sld_bialgebra(b)
    sld = StructureDocument(Space("d", s.space.basis))
    sld.products.update(tri_r=s.ldend.tri_r, tri_l=s.ldend.tri_l)
    sld.coproducts.update(Delta=s.Delta, Nabla=s.Nabla)
    out["sl2_sld_bialgebra"] = sld

    o = sl2_doc()
    rep = adjoint_rep(rb.lie)
    o.representations["adj"] = RepSpec(Space("V", ("vx", "vh", "vy")), rep.rho,
                                       LinearMap(Space("V", ("vx", "vh", "vy")), Space("V", ("vx", "vh", "vy")),
                                                 sl2_operator().matrix),
                                       LinearMap(Space("V", ("vx", "vh", "vy")), Space("V", ("vx", "vh", "vy")),
                                                 (-sl2_operator()).matrix))
    o.operators["T"] = LinearMap(Space("V", ("vx", "vh", "vy")), rb.space, sl2_operator().matrix)
    out["sl2_o_operator"] = o

    n = na2()
    good = StructureDocument(n.space, weight=1)
    good.products["bracket"] = n.bracket
    good.operators["P"] = LinearMap(n.space, n.space, [[-1, 0], [0, 0]])
    out["na2_rb"] = good
    bad = StructureDocument(n.space, weight=1)
    bad.products["bracket"] = n.bracket
    bad.operators["P"] = LinearMap(n.space, n.space, [[1, 0], [0, 0]])
    out["na2_not_rb"] = bad

    empty = StructureDocument(Space("z", ("a", "b")))
    empty.products["bracket"] = BilinearProduct.zero(empty.space)
    out["zero_algebra"] = empty
    return out


def corrupted_jacobi() -> dict:
    raw = to_json(sl2_doc())
    # antisymmetric, but [x, y] = h + x leaves a Jacobi defect of 2x
    raw["products"]["bracket"] = {"antisymmetrize": True, "entries": [
        {"left": "h", "right": "x", "value": {"x": "2"}},
        {"left": "h", "right": "y", "value": {"y": "-2"}},
        {"left": "x", "right": "y", "value": {"h": "1", "x": "1"}},
    ]}
    return raw


def corrupted_sld(valid: StructureDocument) -> dict:
    raw = to_json(valid)
    first = next(iter(raw["coproducts"]["Nabla"]))
    raw["coproducts"]["Nabla"][first] = raw["coproducts"]["Nabla"][first] + [
        {"left": first, "right": first, "value": "1"}]
    return raw


def malformed() -> dict[str, str]:
    base = {"format": "rbla/1", "space": {"name": "g", "basis": ["x", "y"]}}
    docs = {
        "bad_scalar": {**base, "products": {"bracket": {"entries": [
            {"left": "x", "right": "y", "value": {"x": "0.5"}}]}}},
        "bad_label": {**base, "products": {"bracket": {"entries": [
            {"left": "x", "right": "q", "value": {"x": "1"}}]}}},
        "missing_format": {k: v for k, v in base.items() if k != "format"},
        "too_large": {"format": "rbla/1", "space": {"basis": [f"e{i}" for i in range(17)]}},
        "bad_form_shape": {**base, "forms": {"B": [["1", "0"]]}},
    }
    out = {k: json.dumps(v, indent=2) + "\n" for k, v in docs.items()}
    out["duplicate_key"] = ('{"format": "rbla/1", "space": {"basis": ["x"]},\n'
                            ' "operators": {"P": {"x": {"x": "1"}}, "P": {"x": {"x": "2"}}}}\n')
    out["not_json"] = '{"format": "rbla/1", "space": \n'
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(ROOT / "tests/fixtures/docs"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    valid = valid_documents()
    for name, doc in valid.items():
        (out / f"{name}.json").write_text(serialize(doc))
    (out / "corrupted_jacobi.json").write_text(json.dumps(corrupted_jacobi(), indent=2) + "\n")
    (out / "corrupted_sld.json").write_text(json.dumps(corrupted_sld(valid["sl2_sld_bialgebra"]), indent=2) + "\n")
    for name, text in malformed().items():
        (out / f"{name}.json").write_text(text)
    print(f"wrote {len(list(out.glob('*.json')))} documents to {out}")


if __name__ == "__main__":
    main()
