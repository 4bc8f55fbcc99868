"""Command line entry point: ``rbla check | derive | report``.

Exit codes: 0 when every requested check passes, 1 when at least one check
reports a violation (the report is still written), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Callable

import numpy as np

from . import bialgebra as bi
from . import cybe
from .document import DocumentError, RepSpec, StructureDocument, load, on_space, serialize
from .exact import Coproduct, LinearMap, Space, Tensor2, as_space, format_combination, zeros
from .lie import (
    BilinearProduct, LieAlgebra, MatchedPairLie, Representation, adjoint_operator_wrt_form,
    check_bilinear_form, check_lie, check_matched_pair_lie, check_representation, dual_matrices,
    semidirect_bracket,
)
from .prelie import (
    LDendriformAlgebra, PreLieAlgebra, RBPreLieAlgebra, check_ldendriform, check_left_invariant_form,
    check_matched_pair_prelie, check_prelie, check_rb_prelie, check_special_ldendriform, induce_prelie,
    special_from_admissible, special_from_left_invariant_form, subadjacent_lie,
)
from .report import CheckReport, StructureError, timed
from .rota_baxter import (
    RBLieAlgebra, check_admissible, check_matched_pair_rb, check_rb_operator, check_rb_representation,
    semidirect_product_rb,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


# -- resolving document pieces ----------------------------------------------------------


class Context:
    def __init__(self, doc: StructureDocument, args: argparse.Namespace) -> None:
        self.doc = doc
        self.args = args

    @property
    def weight(self) -> Fraction:
        return self.doc.weight if self.doc.weight is not None else Fraction(0)

    def product(self, name: str) -> BilinearProduct:
        return self.doc.need("products", name)

    def lie(self) -> LieAlgebra:
        return LieAlgebra(self.product("bracket"), verify=False)

    def op(self, name: str) -> LinearMap:
        return self.doc.need("operators", name)

    def Q(self) -> LinearMap:
        spec = getattr(self.args, "q", None)
        doc = self.doc
        if spec is None:
            if "Q" in doc.operators:
                return doc.operators["Q"]
            raise DocumentError("no companion operator: add operators.Q or pass --q", "operators")
        P = self.op("P")
        ident = LinearMap.identity(doc.space)
        if spec == "-P":
            return -P
        if spec == "-P-lid":
            return -P - self.weight * ident
        if spec == "0":
            return LinearMap.zero(doc.space)
        if spec == "Phat":
            return adjoint_operator_wrt_form(self.lie(), doc.need("forms", "B"), P)
        return self.op(spec)

    def rb(self, with_Q: bool = False) -> RBLieAlgebra:
        return RBLieAlgebra(self.lie(), self.weight, self.op("P"), self.Q() if with_Q else None, verify=False)

    def rep_name(self) -> str:
        name = getattr(self.args, "rep", None)
        reps = self.doc.representations
        if name is None:
            if len(reps) != 1:
                raise DocumentError("pass --rep to choose a representation", "representations")
            name = next(iter(reps))
        if name not in reps:
            raise DocumentError(f"no representation named {name!r}", "representations")
        return name

    def rep(self) -> Representation:
        spec = self.doc.representations[self.rep_name()]
        return Representation(self.lie(), spec.module, spec.rho, spec.alpha, spec.beta, verify=False)

    def ldend(self) -> LDendriformAlgebra:
        return LDendriformAlgebra(self.product("tri_r"), self.product("tri_l"), verify=False)

    def coproduct(self, name: str) -> Coproduct:
        return self.doc.need("coproducts", name)

    def tensor(self, name: str = "r") -> Tensor2:
        return self.doc.need("tensors", name)

    def gstar_bracket(self) -> BilinearProduct:
        return bi.dualize_coproduct(self.coproduct("delta"))

    def rb_prelie(self) -> RBPreLieAlgebra:
        return RBPreLieAlgebra(PreLieAlgebra(self.product("circ"), verify=False), self.weight,
                               self.op("P"), verify=False)


# -- checkers -------------------------------------------------------------------------------


def _lie_bialg(c: Context) -> CheckReport:
    out = CheckReport("lie-bialgebra")
    with timed(out):
        out.add(check_lie(c.product("bracket")))
        out.add(bi.check_lie_coalgebra(c.coproduct("delta")))
        out.add(bi.check_cocycle(c.lie(), c.coproduct("delta")))
    return out


def _matched_pair(c: Context) -> CheckReport:
    g = c.lie()
    gs = LieAlgebra(c.gstar_bracket(), verify=False)
    rg = Representation(g, gs.space, dual_matrices(g.ad()), verify=False)
    rh = Representation(gs, g.space, dual_matrices(gs.ad()), verify=False)
    return check_matched_pair_lie(MatchedPairLie(g, gs, rg, rh, verify=False))


def _sld_bialg(c: Context) -> CheckReport:
    return bi.check_sld_bialgebra(bi.SLDBialgebra(c.ldend(), c.coproduct("Delta"), c.coproduct("Nabla"),
                                                  verify=False))


def _dual_ldend(c: Context) -> LDendriformAlgebra:
    return LDendriformAlgebra(bi.dualize_coproduct(c.coproduct("Delta")),
                              bi.dualize_coproduct(c.coproduct("Nabla")), verify=False)


def _manin_rb(c: Context) -> CheckReport:
    rb = c.rb()
    return bi.check_manin_triple_rb(bi._assemble_manin(rb, c.Q(), c.gstar_bracket()))


def _manin_prelie(c: Context) -> CheckReport:
    mt = bi._assemble_manin(c.rb(), c.Q(), c.gstar_bracket())
    return bi.check_manin_triple_prelie(bi.manin_triple_prelie_from_rb(mt))


def _cybe(c: Context) -> CheckReport:
    if "P" not in c.doc.operators:
        out = CheckReport("cybe")
        g = c.lie()
        t = cybe.cybe_coeffs(g.c, c.tensor().coeffs)
        from .report import collect
        collect(out, "cybe", t[..., None], [g.space.basis] * 3, ["value"])
        return out
    return cybe.check_admissible_cybe(cybe.CYBESolution(c.rb(), c.Q(), c.tensor(), verify=False))


def _o_instance(c: Context) -> cybe.OOperatorInstance:
    return cybe.OOperatorInstance(c.rb(), c.rep(), c.op("T"))


def _same(c: Context) -> CheckReport:
    rb = c.rb(with_Q=True)
    b = bi.RBLieBialgebra(rb, cybe.coboundary_delta(rb.lie, c.tensor()), verify=False)
    return cybe.verify_same_construction(b, c.tensor())


def _admissible(c: Context) -> CheckReport:
    rb = c.rb()
    if getattr(c.args, "rep", None) is not None:
        return check_admissible(rb, c.rep())
    return check_admissible(rb, c.Q())


def _form(c: Context) -> CheckReport:
    B = c.doc.need("forms", "B")
    if "bracket" in c.doc.products:
        return check_bilinear_form(c.lie(), B)
    return check_left_invariant_form(c.product("circ"), B)


CHECKERS: dict[str, Callable[[Context], CheckReport]] = {
    "lie": lambda c: check_lie(c.product("bracket")),
    "prelie": lambda c: check_prelie(c.product("circ")),
    "ldend": lambda c: check_special_ldendriform(c.ldend()) if c.ldend().special else check_ldendriform(c.ldend()),
    "rb": lambda c: check_rb_operator(c.lie(), c.weight, c.op("P")),
    "rb-prelie": lambda c: check_rb_prelie(c.product("circ"), c.weight, c.op("P")),
    "rep": lambda c: check_representation(c.rep()),
    "rb-rep": lambda c: check_rb_representation(c.rb(), c.rep()),
    "admissible": _admissible,
    "form": _form,
    "lie-coalg": lambda c: bi.check_lie_coalgebra(c.coproduct("delta")),
    "rb-coalg": lambda c: bi.check_rb_lie_coalgebra(c.coproduct("delta"), c.Q(), c.weight),
    "lie-bialg": _lie_bialg,
    "rb-bialg": lambda c: bi.check_rb_lie_bialgebra(bi.RBLieBialgebra(c.rb(with_Q=True), c.coproduct("delta"),
                                                                      verify=False)),
    "sld-coalg": lambda c: bi.check_sld_coalgebra(c.coproduct("Delta"), c.coproduct("Nabla")),
    "sld-bialg": _sld_bialg,
    "matched-pair": _matched_pair,
    "matched-pair-rb": lambda c: check_matched_pair_rb(bi.coadjoint_matched_pair(c.rb(), c.Q(), c.gstar_bracket())),
    "matched-pair-prelie": lambda c: check_matched_pair_prelie(bi.duality_sextuple(c.ldend(), _dual_ldend(c))),
    "manin-rb": _manin_rb,
    "manin-prelie": _manin_prelie,
    "cybe": _cybe,
    "o-operator": lambda c: cybe.check_O_operator(_o_instance(c)),
    "cond-coboundary": lambda c: cybe.coboundary_conditions_general(c.rb(with_Q=True), c.tensor()),
    "same-construction": _same,
    "triple-equivalence": lambda c: bi.triple_equivalence(c.rb(), c.gstar_bracket(), c.Q()),
}


# -- builders ---------------------------------------------------------------------------------


def _lie_doc(rb: RBLieAlgebra, **extra) -> StructureDocument:
    doc = on_space(rb.space, weight=rb.weight)
    doc.products["bracket"] = rb.lie.bracket
    doc.operators["P"] = rb.P
    if rb.Q is not None:
        doc.operators["Q"] = rb.Q
    for k, v in extra.items():
        getattr(doc, k).update(v)
    return doc


def _sld_doc(s: bi.SLDBialgebra) -> StructureDocument:
    doc = on_space(s.space)
    doc.products.update(tri_r=s.ldend.tri_r, tri_l=s.ldend.tri_l, circ=s.ldend.vertical())
    doc.coproducts.update(Delta=s.Delta, Nabla=s.Nabla)
    return doc


def _bialg_doc(b: bi.RBLieBialgebra, r: Tensor2 | None = None) -> StructureDocument:
    doc = _lie_doc(b.rb)
    doc.coproducts["delta"] = b.delta
    if r is not None:
        doc.tensors["r"] = r
    return doc


def _solution_doc(sol: cybe.CYBESolution) -> StructureDocument:
    doc = _lie_doc(sol.rb.with_Q(sol.Q, verify=False))
    doc.tensors["r"] = sol.r
    doc.coproducts["delta"] = cybe.coboundary_delta(sol.rb.lie, sol.r)
    return doc


def _induce_prelie(c: Context) -> StructureDocument:
    p = induce_prelie(c.rb())
    doc = on_space(c.doc.space, weight=c.weight)
    doc.products["circ"] = p.circ
    doc.operators["P"] = c.op("P")
    return doc


def _subadjacent(c: Context) -> StructureDocument:
    doc = on_space(c.doc.space, weight=c.weight)
    doc.products["bracket"] = subadjacent_lie(c.product("circ")).bracket
    if "P" in c.doc.operators:
        doc.operators["P"] = c.op("P")
    return doc


def _dual_rep(c: Context) -> StructureDocument:
    name = c.rep_name()
    spec = c.doc.representations[name]
    module = as_space(spec.module.dual())
    doc = on_space(c.doc.space, weight=c.weight, products=dict(c.doc.products),
                   operators={k: v for k, v in c.doc.operators.items() if v.domain.basis == c.doc.space.basis})
    alpha = LinearMap(module, module, spec.beta.matrix.T) if spec.beta is not None else None
    beta = LinearMap(module, module, spec.alpha.matrix.T) if spec.alpha is not None else None
    doc.representations[name + "*"] = RepSpec(module, dual_matrices(spec.rho), alpha, beta)
    return doc


def _adjoint_op(c: Context) -> StructureDocument:
    doc = on_space(c.doc.space, weight=c.weight, products=dict(c.doc.products), forms=dict(c.doc.forms))
    doc.operators["P"] = c.op("P")
    doc.operators["Phat"] = adjoint_operator_wrt_form(c.lie(), c.doc.need("forms", "B"), c.op("P"))
    return doc


def _semidirect(c: Context) -> StructureDocument:
    prod = semidirect_bracket(c.lie(), c.rep())
    doc = on_space(prod.space, weight=c.weight)
    doc.products["bracket"] = prod
    return doc


def _semidirect_rb(c: Context) -> StructureDocument:
    return _lie_doc(semidirect_product_rb(c.rb(), c.rep()))


def _special_ldend(c: Context) -> StructureDocument:
    ld = special_from_admissible(c.rb(), c.Q())
    doc = on_space(c.doc.space)
    doc.products.update(tri_r=ld.tri_r, tri_l=ld.tri_l, circ=ld.vertical())
    return doc


def _left_invariant_ldend(c: Context) -> StructureDocument:
    ld = special_from_left_invariant_form(PreLieAlgebra(c.product("circ"), verify=False),
                                          c.doc.need("forms", "B"))
    doc = on_space(c.doc.space)
    doc.products.update(tri_r=ld.tri_r, tri_l=ld.tri_l, circ=ld.vertical())
    return doc


def _double_manin(c: Context) -> StructureDocument:
    mt = bi.build_manin_triple_rb(c.rb(with_Q=True), c.gstar_bracket())
    qd = direct_sum_q(mt)
    doc = _lie_doc(mt.double.with_Q(qd, verify=False))
    doc.forms["B"] = mt.form
    return doc


def direct_sum_q(mt: bi.ManinTripleRB) -> LinearMap:
    from .exact import direct_sum_map
    return direct_sum_map(mt.g.Q, mt.g.P.T, mt.double.space)


def _coboundary_delta(c: Context) -> StructureDocument:
    doc = on_space(c.doc.space, weight=c.doc.weight, products={"bracket": c.product("bracket")},
                   tensors={"r": c.tensor()})
    doc.coproducts["delta"] = cybe.coboundary_delta(c.lie(), c.tensor())
    for k in ("P", "Q"):
        if k in c.doc.operators:
            doc.operators[k] = c.doc.operators[k]
    return doc


def _beta(c: Context) -> LinearMap:
    spec = c.doc.representations[c.rep_name()]
    if spec.beta is None:
        raise DocumentError("the representation needs a beta operator", f"representations.{c.rep_name()}")
    return spec.beta


def _lift_o(c: Context) -> StructureDocument:
    return _solution_doc(cybe.lift_O_operator(_o_instance(c), c.Q(), _beta(c)))


def _bialgebras_from_o(c: Context) -> dict[str, StructureDocument]:
    inst = _o_instance(c)
    out = {}
    for (tag, Q, beta), b in zip(cybe.standard_pairs(inst), cybe.bialgebras_from_O(inst)):
        out[tag] = _bialg_doc(b, cybe.lift_O_operator(inst, Q, beta).r)
    return out


def _canonical_r(c: Context) -> dict[str, StructureDocument]:
    a = c.rb_prelie()
    inst = cybe.prelie_instance(a)
    out = {}
    for (tag, Q, beta), b in zip(cybe.standard_pairs(inst), cybe.bialgebras_from_O(inst)):
        out[tag] = _bialg_doc(b, cybe.lift_O_operator(inst, Q, beta).r)
    return out


def _induce_sld(c: Context) -> StructureDocument:
    b = bi.RBLieBialgebra(c.rb(with_Q=True), c.coproduct("delta"))
    return _sld_doc(bi.induce_sld_bialgebra(b))


def _sld_from_o(c: Context) -> StructureDocument:
    return _sld_doc(cybe.sld_from_O(_o_instance(c), c.Q(), _beta(c)))


def _cons1(c: Context) -> StructureDocument:
    return _sld_doc(cybe.cor_cons1(c.rb(), c.Q()))


def _cons2(c: Context) -> dict[str, StructureDocument]:
    first, second = cybe.cor_cons2(c.rb_prelie())
    return {"minusP": _sld_doc(first), "zero": _sld_doc(second)}


def _iterate_family(c: Context) -> dict[str, StructureDocument]:
    rounds = getattr(c.args, "rounds", 2)
    return {tag: _sld_doc(s) for tag, s in cybe.iterate_family(c.rb(), rounds)}


BUILDERS: dict[str, Callable[[Context], StructureDocument | dict[str, StructureDocument]]] = {
    "induce-prelie": _induce_prelie,
    "subadjacent": _subadjacent,
    "dual-rep": _dual_rep,
    "adjoint-op": _adjoint_op,
    "semidirect": _semidirect,
    "semidirect-rb": _semidirect_rb,
    "special-ldend": _special_ldend,
    "left-invariant-ldend": _left_invariant_ldend,
    "double-manin": _double_manin,
    "coboundary-delta": _coboundary_delta,
    "lift-o": _lift_o,
    "bialgebras-from-o": _bialgebras_from_o,
    "canonical-r": _canonical_r,
    "induce-sld": _induce_sld,
    "sld-from-o": _sld_from_o,
    "cons1": _cons1,
    "cons2": _cons2,
    "iterate-family": _iterate_family,
}


# -- report: tables and published comparisons ----------------------------------------------------


def parse_combination(text: str, space) -> np.ndarray:
    """Inverse of ``format_combination`` for a given basis: ``-3x+2h+y``."""
    labels = sorted(space.basis, key=len, reverse=True)
    pat = re.compile(r"([+-]?)(\(\d+(?:/\d+)?\)|\d+(?:/\d+)?)?(" + "|".join(map(re.escape, labels)) + ")")
    s = text.replace(" ", "")
    out = zeros(space.dim)
    if s in ("", "0"):
        return out
    pos = 0
    while pos < len(s):
        m = pat.match(s, pos)
        if m is None or m.end() == pos:
            raise DocumentError(f"cannot read linear combination {text!r}", "published")
        coeff = Fraction(m.group(2).strip("()")) if m.group(2) else Fraction(1)
        out[space.index(m.group(3))] += -coeff if m.group(1) == "-" else coeff
        pos = m.end()
    return out


def _table(prod: BilinearProduct, skip_zero: bool = False) -> dict[str, str]:
    b = prod.space.basis
    out = {}
    for i, x in enumerate(b):
        for j, y in enumerate(b):
            s = format_combination(prod.entries[i, j], b) or "0"
            if skip_zero and s == "0":
                continue
            out[f"{x},{y}"] = s
    return out


def _report_tables(c: Context) -> tuple[dict[str, dict[str, str]], CheckReport | None]:
    doc = c.doc
    tables: dict[str, dict[str, str]] = {}
    computed: dict[str, np.ndarray] = {}
    b = doc.space.basis
    if "bracket" in doc.products and "P" in doc.operators and c.weight == 0:
        p = induce_prelie(c.rb()).circ
        tables["circ"] = _table(p)
        computed.update({f"circ:{k}": p.entries[b.index(k.split(',')[0]), b.index(k.split(',')[1])]
                         for k in tables["circ"]})
    Q = None
    if "bracket" in doc.products and "P" in doc.operators and "B" in doc.forms:
        ph = adjoint_operator_wrt_form(c.lie(), doc.forms["B"], c.op("P"))
        tables["Phat"] = {lab: format_combination(ph.matrix[:, j], b) or "0" for j, lab in enumerate(b)}
        computed.update({f"Phat:{lab}": ph.matrix[:, j] for j, lab in enumerate(b)})
        Q = ph
    if "bracket" in doc.products and "P" in doc.operators and c.weight == 0:
        # the form's adjoint is the default companion for the tables unless --q says otherwise
        if c.args.q is not None or Q is None:
            try:
                Q = c.Q()
            except DocumentError:
                pass
        if Q is not None:
            try:
                ld = special_from_admissible(c.rb(), Q)
                tables["tri_l"] = _table(ld.tri_l, skip_zero=True)
                tables["tri_r"] = _table(ld.tri_r, skip_zero=True)
                n = len(b)
                computed.update({f"tri_l:{b[i]},{b[j]}": ld.tri_l.entries[i, j] for i in range(n) for j in range(n)})
            except StructureError:
                pass
    if not doc.published:
        return tables, None
    ref = CheckReport("published-tables")
    from .report import Violation
    for name, table in doc.published.items():
        for key, text in table.items():
            want = parse_combination(text, doc.space)
            got = computed.get(f"{name}:{key}")
            if got is None:
                ref.info.setdefault("not_computed", []).append(f"{name}:{key}")
                continue
            if np.count_nonzero(want - got):
                ref.violations.append(Violation(
                    f"published-{name}", tuple(key.split(",")),
                    tuple(Fraction(v) for v in got - want), tuple(f"computed-minus-published:{lab}" for lab in b)))
                ref.info.setdefault("mismatches", []).append(
                    {"table": name, "entry": key, "published": text,
                     "computed": format_combination(got, b) or "0"})
    return tables, ref


def _report(c: Context) -> tuple[CheckReport, dict[str, dict[str, str]]]:
    out = CheckReport("report")
    skipped = []
    with timed(out):
        for name, fn in CHECKERS.items():
            try:
                rep = fn(c)
            except DocumentError:
                skipped.append(name)
                continue
            except StructureError as exc:
                rep = exc.report or CheckReport(name)
                rep.info["error"] = str(exc)
            rep.name = f"{name}: {rep.name}" if rep.name != name else name
            out.add(rep)
        tables, ref = _report_tables(c)
        if ref is not None:
            out.add(ref)
    out.info["skipped"] = skipped
    return out, tables


# -- command plumbing ------------------------------------------------------------------------------


def _emit(report: CheckReport, fmt: str, extra: dict | None = None) -> None:
    if fmt in ("both", "text"):
        for line in report.summary_lines():
            print(line)
        if extra:
            for title, table in extra.items():
                print(f"\n[{title}]")
                for k, v in table.items():
                    print(f"  {k:10} {v}")
        mism = report.find("published-tables")
        if mism is not None and mism.info.get("mismatches"):
            print("\npublished-table discrepancies:")
            for m in mism.info["mismatches"]:
                print(f"  {m['table']} {m['entry']}: published {m['published']}  computed {m['computed']}")
        if fmt == "both":
            print()
    if fmt in ("both", "json"):
        body = report.to_dict()
        if extra:
            body["tables"] = extra
        print(json.dumps(body, indent=2))


def _documents(path: str) -> dict[str, StructureDocument]:
    loaded = load(path)
    return loaded if isinstance(loaded, dict) else {"": loaded}


def _for_each(docs: dict[str, StructureDocument], fn) -> CheckReport:
    if list(docs) == [""]:
        return fn(docs[""])
    top = CheckReport("bundle")
    for name, d in docs.items():
        rep = fn(d)
        rep.name = f"{name}: {rep.name}"
        top.add(rep)
    return top


def cmd_check(args: argparse.Namespace) -> int:
    docs = _documents(args.file)

    def run(doc: StructureDocument) -> CheckReport:
        try:
            return CHECKERS[args.what](Context(doc, args))
        except StructureError as exc:
            rep = exc.report or CheckReport(args.what)
            rep.info["error"] = str(exc)
            if rep.passed:
                rep.violations.append(_error_violation(str(exc)))
            return rep

    report = _for_each(docs, run)
    _emit(report, args.format)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _error_violation(msg: str):
    from .report import Violation
    return Violation("precondition", (msg,), ())


def cmd_derive(args: argparse.Namespace) -> int:
    docs = _documents(args.file)
    if len(docs) != 1:
        raise DocumentError("derive takes a single document, not a bundle")
    ctx = Context(next(iter(docs.values())), args)
    try:
        result = BUILDERS[args.op](ctx)
    except StructureError as exc:
        rep = exc.report or CheckReport(args.op)
        rep.info["error"] = str(exc)
        if rep.passed:
            rep.violations.append(_error_violation(str(exc)))
        print(f"derive {args.op}: {exc}", file=sys.stderr)
        _emit(rep, args.format)
        return EXIT_VIOLATION
    text = serialize(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    docs = _documents(args.file)
    tables_all: dict[str, dict[str, str]] = {}

    def run(doc: StructureDocument) -> CheckReport:
        rep, tables = _report(Context(doc, args))
        for k, v in tables.items():
            tables_all[k] = v
        return rep

    report = _for_each(docs, run)
    _emit(report, args.format, tables_all)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rbla", description="Exact checks and constructions for "
                                 "Rota-Baxter Lie algebras, bialgebras and L-dendriform structures.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("file")
        p.add_argument("--q", help="companion operator: -P, -P-lid, 0, Phat or an operator name")
        p.add_argument("--rep", help="representation name")
        p.add_argument("--format", choices=("both", "json", "text"), default="both")

    p = sub.add_parser("check", help="run one checker")
    common(p)
    p.add_argument("--what", required=True, choices=sorted(CHECKERS))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", help="build a derived structure")
    common(p)
    p.add_argument("--op", required=True, choices=sorted(BUILDERS))
    p.add_argument("-o", "--output")
    p.add_argument("--rounds", type=int, default=2)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("report", help="run every applicable check")
    common(p)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
