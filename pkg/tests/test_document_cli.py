import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rbla import cli
from rbla.document import DocumentError, RepSpec, StructureDocument, load, parse, serialize
from rbla.exact import Coproduct, LinearMap, Space, Tensor2, format_combination, qarray
from rbla.fixtures import SL2
from rbla.lie import BilinearForm, BilinearProduct

DOCS = Path(__file__).parent / "fixtures" / "docs"


def doc_path(name: str) -> str:
    return str(DOCS / f"{name}.json")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- parsing ---------------------------------------------------------------------------------


def test_fix_sl2_bracket_is_completed():
    doc = load(doc_path("fix_sl2"))
    c = doc.products["bracket"].entries
    assert int(np.count_nonzero(c.any(axis=2))) == 6
    assert doc.weight == 0 and doc.space.basis == ("x", "h", "y")


def test_empty_products_give_the_zero_algebra():
    doc = parse(json.dumps({"format": "rbla/1", "space": {"basis": ["a", "b"]},
                            "products": {"bracket": {"entries": []}}}))
    assert not np.count_nonzero(doc.products["bracket"].entries)


def test_decimal_scalars_are_rejected_with_a_path():
    raw = {"format": "rbla/1", "space": {"basis": ["a"]}, "operators": {"P": {"a": {"a": "0.5"}}}}
    with pytest.raises(DocumentError) as exc:
        parse(json.dumps(raw))
    assert exc.value.path == "operators.P.a.a"


@pytest.mark.parametrize("value", [0.5, True, None, "1/0", "x"])
def test_other_bad_scalars(value):
    raw = {"format": "rbla/1", "space": {"basis": ["a"]}, "weight": value}
    with pytest.raises(DocumentError) as exc:
        parse(json.dumps(raw))
    assert exc.value.path == "weight"


def test_integer_and_fraction_scalars_are_accepted():
    doc = parse(json.dumps({"format": "rbla/1", "space": {"basis": ["a"]}, "weight": "-3/6",
                            "forms": {"B": [[2]]}}))
    assert doc.weight == Fraction(-1, 2) and doc.forms["B"].matrix[0, 0] == 2


@pytest.mark.parametrize("name,fragment", [
    ("bad_label", "unknown basis label"),
    ("bad_form_shape", "matrix"),
    ("duplicate_key", "duplicate key"),
    ("missing_format", "format"),
    ("not_json", "line"),
    ("too_large", "RBLA_MAX_DIM"),
])
def test_malformed_fixtures_raise(name, fragment):
    with pytest.raises(DocumentError) as exc:
        load(doc_path(name))
    assert fragment in str(exc.value)


def test_operator_on_a_module():
    raw = {"format": "rbla/1", "space": {"basis": ["a", "b"]},
           "representations": {"rho": {"module": {"name": "V", "basis": ["v"]}, "matrices": {"a": {"v": {"v": 1}}}}},
           "operators": {"T": {"domain": "rho", "columns": {"v": {"b": "2"}}}}}
    doc = parse(json.dumps(raw))
    T = doc.operators["T"]
    assert T.domain.basis == ("v",) and T.matrix.tolist() == [[0], [2]]
    assert parse(serialize(doc)) == doc


def test_bundles_round_trip():
    doc = load(doc_path("fix_sl2"))
    text = serialize({"one": doc, "two": doc})
    back = parse(text)
    assert set(back) == {"one", "two"} and back["two"] == doc


# -- round trip ---------------------------------------------------------------------------------

scalars = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def documents(draw):
    n = draw(st.integers(1, 3))
    labels = draw(st.lists(st.sampled_from(["x", "h", "y", "e", "f", "x*", "u_1"]), min_size=n, max_size=n,
                           unique=True))
    space = Space(draw(st.sampled_from(["g", "A"])), tuple(labels))

    def arr(*shape):
        size = int(np.prod(shape))
        values = draw(st.lists(scalars, min_size=size, max_size=size))
        return qarray(np.array(values, dtype=object).reshape(shape))

    doc = StructureDocument(space, weight=draw(st.none() | scalars))
    for name in draw(st.sets(st.sampled_from(["bracket", "circ", "tri_r", "tri_l"]))):
        doc.products[name] = BilinearProduct(space, arr(n, n, n))
    for name in draw(st.sets(st.sampled_from(["P", "Q", "Phat"]))):
        doc.operators[name] = LinearMap(space, space, arr(n, n))
    if draw(st.booleans()):
        doc.forms["B"] = BilinearForm(space, arr(n, n))
    if draw(st.booleans()):
        doc.coproducts["delta"] = Coproduct(space, arr(n, n, n))
    if draw(st.booleans()):
        doc.tensors["r"] = Tensor2(space, space, arr(n, n))
    if draw(st.booleans()):
        m = draw(st.integers(1, 2))
        module = Space("V", tuple(f"v{k}" for k in range(m)))
        doc.representations["rho"] = RepSpec(module, arr(n, m, m), alpha=LinearMap(module, module, arr(m, m)))
        doc.operators["T"] = LinearMap(module, space, arr(n, m))
    if draw(st.booleans()):
        doc.notes.append(draw(st.text(max_size=12)))
    return doc


@given(documents())
def test_parse_inverts_serialize(doc):
    text = serialize(doc)
    back = parse(text)
    assert back == doc
    assert serialize(back) == text
    for name, p in doc.products.items():
        assert np.array_equal(back.products[name].entries, p.entries)
    for name, op in doc.operators.items():
        assert np.array_equal(back.operators[name].matrix, op.matrix)
    for name, rep in doc.representations.items():
        assert np.array_equal(back.representations[name].rho, rep.rho)
    if "delta" in doc.coproducts:
        assert np.array_equal(back.coproducts["delta"].coeffs, doc.coproducts["delta"].coeffs)
    if "r" in doc.tensors:
        assert np.array_equal(back.tensors["r"].coeffs, doc.tensors["r"].coeffs)


@pytest.mark.parametrize("name", ["fix_sl2", "sl2_chain_bialgebra", "sl2_sld_bialgebra", "sl2_o_operator",
                                  "na2_rb", "sl2_prelie", "zero_algebra"])
def test_fixture_files_round_trip(name):
    doc = load(doc_path(name))
    assert parse(serialize(doc)) == doc


@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7), min_size=3, max_size=3))
def test_combinations_round_trip(coords):
    text = format_combination(coords, SL2.basis)
    assert list(cli.parse_combination(text, SL2)) == coords


def test_combination_with_starred_labels():
    space = Space("d", ("x", "h", "x*", "h*"))
    v = cli.parse_combination("-x*+(1/2)h-3h*", space)
    assert list(v) == [0, Fraction(1, 2), -1, -3]


# -- exit codes ---------------------------------------------------------------------------------

MATRIX = [
    ("fix_sl2", ["--what", "rb"], 0),
    ("fix_sl2", ["--what", "lie"], 0),
    ("fix_sl2", ["--what", "form"], 0),
    ("fix_sl2", ["--what", "admissible", "--q", "Phat"], 0),
    ("fix_sl2", ["--what", "admissible", "--q=-P"], 0),
    ("sl2_plain", ["--what", "rb"], 0),
    ("na2_rb", ["--what", "rb"], 0),
    ("na2_not_rb", ["--what", "rb"], 1),
    ("na2_not_rb", ["--what", "lie"], 0),
    ("zero_algebra", ["--what", "lie"], 0),
    ("sl2_prelie", ["--what", "prelie"], 0),
    ("sl2_o_operator", ["--what", "o-operator"], 0),
    ("sl2_chain_bialgebra", ["--what", "rb-bialg"], 0),
    ("sl2_chain_bialgebra", ["--what", "triple-equivalence"], 0),
    ("sl2_sld_bialgebra", ["--what", "sld-bialg"], 0),
    ("corrupted_sld", ["--what", "sld-bialg"], 1),
    ("corrupted_jacobi", ["--what", "lie"], 1),
    ("bad_label", ["--what", "lie"], 2),
    ("bad_scalar", ["--what", "lie"], 2),
    ("bad_form_shape", ["--what", "form"], 2),
    ("duplicate_key", ["--what", "lie"], 2),
    ("missing_format", ["--what", "lie"], 2),
    ("not_json", ["--what", "lie"], 2),
    ("too_large", ["--what", "lie"], 2),
    ("sl2_prelie", ["--what", "lie"], 2),
    ("na2_rb", ["--what", "cybe"], 2),
]


@pytest.mark.parametrize("name,args,code", MATRIX, ids=[f"{n}-{a[1]}" for n, a, _ in MATRIX])
def test_exit_code_matrix(capsys, name, args, code):
    got, out, err = run(capsys, "check", doc_path(name), *args)
    assert got == code, err
    if code == 2:
        assert err.startswith("error:") or "usage" in err
    else:
        assert out


def test_matrix_covers_every_fixture():
    assert {n for n, _, _ in MATRIX} == {p.stem for p in DOCS.glob("*.json")}


def test_missing_file_and_bad_usage(capsys):
    assert run(capsys, "check", doc_path("no_such_document"), "--what", "lie")[0] == 2
    assert run(capsys, "check", doc_path("fix_sl2"), "--what", "nope")[0] == 2
    assert run(capsys)[0] == 2


def test_jacobi_witness_is_reported(capsys):
    code, out, _ = run(capsys, "check", doc_path("corrupted_jacobi"), "--what", "lie", "--format", "json")
    assert code == 1
    report = json.loads(out)
    assert report["verdict"] == "fail"
    assert [v["equation"] for v in report["violations"]] == ["jacobi"]
    assert report["violations"][0]["witness"] == ["x", "h", "y"]


def test_derive_then_check(capsys, tmp_path):
    out = tmp_path / "prelie.json"
    assert run(capsys, "derive", doc_path("fix_sl2"), "--op", "induce-prelie", "-o", str(out))[0] == 0
    assert run(capsys, "check", str(out), "--what", "prelie")[0] == 0
    doc = load(str(out))
    assert format_combination(doc.products["circ"].entries[2, 0], SL2.basis) == "-4x+3h"


@pytest.mark.parametrize("op,what,extra", [
    ("special-ldend", "ldend", ["--q", "Phat"]),
    ("coboundary-delta", "lie-coalg", []),
])
def test_derived_documents_pass_their_checks(capsys, tmp_path, op, what, extra):
    src = "sl2_chain_bialgebra" if op == "coboundary-delta" else "fix_sl2"
    out = tmp_path / "derived.json"
    code, _, err = run(capsys, "derive", doc_path(src), "--op", op, "-o", str(out), *extra)
    assert code == 0, err
    assert run(capsys, "check", str(out), "--what", what)[0] == 0


def test_report_on_fix_sl2_flags_only_the_y_x_product(capsys):
    code, out, _ = run(capsys, "report", doc_path("fix_sl2"), "--format", "json")
    report = json.loads(out)
    assert code == 1
    bad = [v for v in _walk(report) if v["equation"].startswith("published")]
    assert bad == [{"equation": "published-circ", "witness": ["y", "x"],
                    "defect": {"computed-minus-published:x": "-4", "computed-minus-published:y": "4"}}]
    assert report["tables"]["circ"]["y,x"] == "-4x+3h"
    others = [v for v in _walk(report) if not v["equation"].startswith("published")]
    assert not others


def _walk(report):
    yield from report.get("violations", [])
    for child in report.get("children", []):
        yield from _walk(child)


def test_report_on_a_consistent_document_exits_zero(capsys):
    assert run(capsys, "report", doc_path("na2_rb"))[0] == 0
