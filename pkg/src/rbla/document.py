"""JSON structure documents: parse, validate and serialize.

A document names one base space and any number of structures on it::

    {
      "format": "rbla/1",
      "space": {"name": "g", "basis": ["x", "h", "y"]},
      "weight": "0",
      "products": {"bracket": {"antisymmetrize": true,
                               "entries": [{"left": "h", "right": "x", "value": {"x": "2"}}]}},
      "operators": {"P": {"x": {"x": "1", "y": "1"}}},
      "forms": {"B": [["0", "0", "1"], ["0", "2", "0"], ["1", "0", "0"]]},
      "coproducts": {"delta": {"x": [{"left": "x", "right": "h", "value": "1"}]}},
      "representations": {"rho": {"module": {"name": "V", "basis": ["v"]},
                                  "matrices": {"x": {"v": {"v": "1"}}}, "alpha": {...}}},
      "tensors": {"r": [{"left": "x", "right": "y", "value": "1"}]}
    }

Operators are column maps (image of each basis label). An operator whose
domain is a representation module is written ``{"domain": "rho", "columns": {...}}``.
Scalars are integer or ``p/q`` strings; omitted entries are zero.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .exact import AnySpace, Coproduct, LinearMap, Space, Tensor2, as_space, scalar, zeros
from .lie import BilinearForm, BilinearProduct

FORMAT = "rbla/1"
BUNDLE_FORMAT = "rbla-bundle/1"
PRODUCT_NAMES = ("bracket", "circ", "tri_r", "tri_l")
SECTIONS = ("format", "space", "weight", "products", "operators", "forms", "coproducts",
            "representations", "tensors", "published", "notes")


class DocumentError(ValueError):
    def __init__(self, msg: str, path: str = "") -> None:
        super().__init__(f"{path}: {msg}" if path else msg)
        self.path = path


def max_dim() -> int:
    return int(os.environ.get("RBLA_MAX_DIM", "16"))


@dataclass
class RepSpec:
    module: Space
    rho: np.ndarray  # (dim g, dim V, dim V)
    alpha: LinearMap | None = None
    beta: LinearMap | None = None


@dataclass
class StructureDocument:
    space: Space
    weight: Fraction | None = None
    products: dict[str, BilinearProduct] = field(default_factory=dict)
    operators: dict[str, LinearMap] = field(default_factory=dict)
    forms: dict[str, BilinearForm] = field(default_factory=dict)
    coproducts: dict[str, Coproduct] = field(default_factory=dict)
    representations: dict[str, RepSpec] = field(default_factory=dict)
    tensors: dict[str, Tensor2] = field(default_factory=dict)
    published: dict[str, dict[str, str]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StructureDocument) and to_json(self) == to_json(other)

    def need(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            raise DocumentError(f"document has no {section[:-1]} named {name!r}", section)
        return table[name]


# -- parsing -----------------------------------------------------------------------


def _no_duplicates(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in pairs:
        if k in out:
            raise DocumentError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _scalar(v: Any, path: str) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float) or not isinstance(v, (int, str)):
        raise DocumentError(f"scalar must be an integer or 'p/q' string, got {v!r}", path)
    try:
        return scalar(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc), path) from None


def _index(space: AnySpace, label: Any, path: str) -> int:
    if not isinstance(label, str):
        raise DocumentError(f"basis label must be a string, got {label!r}", path)
    try:
        return space.index(label)
    except KeyError:
        raise DocumentError(f"unknown basis label {label!r} in space {space.name!r}", path) from None


def _obj(v: Any, path: str) -> dict:
    if not isinstance(v, dict):
        raise DocumentError("expected an object", path)
    return v


def _space(raw: Any, path: str) -> Space:
    raw = _obj(raw, path)
    basis = raw.get("basis")
    if not isinstance(basis, list) or not all(isinstance(b, str) and b for b in basis):
        raise DocumentError("basis must be a list of non-empty strings", path + ".basis")
    if len(basis) > max_dim():
        raise DocumentError(f"dimension {len(basis)} exceeds RBLA_MAX_DIM={max_dim()}", path + ".basis")
    try:
        return Space(str(raw.get("name", "g")), tuple(basis))
    except ValueError as exc:
        raise DocumentError(str(exc), path) from None


def _vector(space: AnySpace, raw: Any, path: str) -> np.ndarray:
    out = zeros(space.dim)
    for lab, v in _obj(raw, path).items():
        out[_index(space, lab, f"{path}.{lab}")] += _scalar(v, f"{path}.{lab}")
    return out


def _columns(domain: AnySpace, codomain: AnySpace, raw: Any, path: str) -> LinearMap:
    m = zeros(codomain.dim, domain.dim)
    for lab, col in _obj(raw, path).items():
        m[:, _index(domain, lab, f"{path}.{lab}")] = _vector(codomain, col, f"{path}.{lab}")
    return LinearMap(domain, codomain, m)


def _product(space: Space, raw: Any, path: str) -> BilinearProduct:
    raw = _obj(raw, path)
    anti = raw.get("antisymmetrize", False)
    if not isinstance(anti, bool):
        raise DocumentError("antisymmetrize must be true or false", path + ".antisymmetrize")
    entries = raw.get("entries", [])
    if not isinstance(entries, list):
        raise DocumentError("entries must be a list", path + ".entries")
    n = space.dim
    c = zeros(n, n, n)
    for k, e in enumerate(entries):
        p = f"{path}.entries[{k}]"
        e = _obj(e, p)
        i = _index(space, e.get("left"), p + ".left")
        j = _index(space, e.get("right"), p + ".right")
        v = _vector(space, e.get("value", {}), p + ".value")
        c[i, j] += v
        if anti and i != j:
            c[j, i] -= v
    return BilinearProduct(space, c)


def _tensor_entries(left: AnySpace, right: AnySpace, raw: Any, path: str) -> np.ndarray:
    if not isinstance(raw, list):
        raise DocumentError("expected a list of tensor entries", path)
    t = zeros(left.dim, right.dim)
    for k, e in enumerate(raw):
        p = f"{path}[{k}]"
        e = _obj(e, p)
        t[_index(left, e.get("left"), p + ".left"), _index(right, e.get("right"), p + ".right")] += \
            _scalar(e.get("value"), p + ".value")
    return t


def _form(space: Space, raw: Any, path: str) -> BilinearForm:
    n = space.dim
    if not isinstance(raw, list) or len(raw) != n or not all(isinstance(r, list) and len(r) == n for r in raw):
        raise DocumentError(f"form must be a {n}x{n} matrix", path)
    m = zeros(n, n)
    for i, row in enumerate(raw):
        for j, v in enumerate(row):
            m[i, j] = _scalar(v, f"{path}[{i}][{j}]")
    return BilinearForm(space, m)


def _representation(space: Space, raw: Any, path: str) -> RepSpec:
    raw = _obj(raw, path)
    module = _space(raw.get("module"), path + ".module")
    rho = zeros(space.dim, module.dim, module.dim)
    for lab, cols in _obj(raw.get("matrices", {}), path + ".matrices").items():
        p = f"{path}.matrices.{lab}"
        rho[_index(space, lab, p)] = _columns(module, module, cols, p).matrix
    ops = {}
    for key in ("alpha", "beta"):
        if key in raw:
            ops[key] = _columns(module, module, raw[key], f"{path}.{key}")
    return RepSpec(module, rho, **ops)


def from_json(raw: Any) -> StructureDocument:
    raw = _obj(raw, "")
    if raw.get("format") != FORMAT:
        raise DocumentError(f"missing or unsupported format (expected {FORMAT!r})", "format")
    unknown = set(raw) - set(SECTIONS)
    if unknown:
        raise DocumentError(f"unknown section(s) {sorted(unknown)}")
    space = _space(raw.get("space"), "space")
    doc = StructureDocument(space)
    if "weight" in raw:
        doc.weight = _scalar(raw["weight"], "weight")
    for name, p in _obj(raw.get("products", {}), "products").items():
        if name not in PRODUCT_NAMES:
            raise DocumentError(f"unknown product name (expected one of {PRODUCT_NAMES})", f"products.{name}")
        doc.products[name] = _product(space, p, f"products.{name}")
    for name, r in _obj(raw.get("representations", {}), "representations").items():
        doc.representations[name] = _representation(space, r, f"representations.{name}")
    for name, op in _obj(raw.get("operators", {}), "operators").items():
        path = f"operators.{name}"
        op = _obj(op, path)
        if "domain" in op:
            dom = op["domain"]
            if dom not in doc.representations:
                raise DocumentError(f"unknown domain {dom!r}", path + ".domain")
            doc.operators[name] = _columns(doc.representations[dom].module, space, op.get("columns", {}),
                                           path + ".columns")
        else:
            doc.operators[name] = _columns(space, space, op, path)
    for name, f in _obj(raw.get("forms", {}), "forms").items():
        doc.forms[name] = _form(space, f, f"forms.{name}")
    for name, cop in _obj(raw.get("coproducts", {}), "coproducts").items():
        path = f"coproducts.{name}"
        d = zeros(space.dim, space.dim, space.dim)
        for lab, ents in _obj(cop, path).items():
            d[_index(space, lab, f"{path}.{lab}")] = _tensor_entries(space, space, ents, f"{path}.{lab}")
        doc.coproducts[name] = Coproduct(space, d)
    for name, t in _obj(raw.get("tensors", {}), "tensors").items():
        doc.tensors[name] = Tensor2(space, space, _tensor_entries(space, space, t, f"tensors.{name}"))
    for name, table in _obj(raw.get("published", {}), "published").items():
        table = _obj(table, f"published.{name}")
        if not all(isinstance(v, str) for v in table.values()):
            raise DocumentError("published entries must be strings", f"published.{name}")
        doc.published[name] = dict(table)
    notes = raw.get("notes", [])
    if not isinstance(notes, list) or not all(isinstance(n, str) for n in notes):
        raise DocumentError("notes must be a list of strings", "notes")
    doc.notes = list(notes)
    return doc


def parse(data: bytes | str) -> StructureDocument | dict[str, StructureDocument]:
    """Parse a document or a bundle of named documents."""
    try:
        raw = json.loads(data, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    if isinstance(raw, dict) and raw.get("format") == BUNDLE_FORMAT:
        docs = _obj(raw.get("documents"), "documents")
        out = {}
        for name, d in docs.items():
            try:
                out[name] = from_json(d)
            except DocumentError as exc:
                raise DocumentError(str(exc), f"documents.{name}") from None
        return out
    return from_json(raw)


def load(path: str) -> StructureDocument | dict[str, StructureDocument]:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read: {exc.strerror}", path) from None
    return parse(data)


# -- serialization --------------------------------------------------------------------


def _s(v: Fraction) -> str:
    return str(v)


def _vec_json(labels, coords) -> dict[str, str]:
    return {lab: _s(v) for lab, v in zip(labels, coords) if v != 0}


def _cols_json(m: LinearMap) -> dict[str, dict[str, str]]:
    dom, cod = m.domain.basis, m.codomain.basis
    return {lab: _vec_json(cod, m.matrix[:, j]) for j, lab in enumerate(dom)
            if np.count_nonzero(m.matrix[:, j])}


def _tensor_json(left, right, t: np.ndarray) -> list[dict[str, str]]:
    return [{"left": left[a], "right": right[b], "value": _s(t[a, b])}
            for a in range(t.shape[0]) for b in range(t.shape[1]) if t[a, b] != 0]


def _space_json(s: AnySpace) -> dict[str, Any]:
    return {"name": s.name, "basis": list(s.basis)}


def to_json(doc: StructureDocument) -> dict[str, Any]:
    b = doc.space.basis
    out: dict[str, Any] = {"format": FORMAT, "space": _space_json(doc.space)}
    if doc.weight is not None:
        out["weight"] = _s(doc.weight)
    if doc.products:
        out["products"] = {
            name: {"entries": [{"left": b[i], "right": b[j], "value": _vec_json(b, p.entries[i, j])}
                               for i in range(len(b)) for j in range(len(b))
                               if np.count_nonzero(p.entries[i, j])]}
            for name, p in doc.products.items()}
    if doc.representations:
        reps = {}
        for name, r in doc.representations.items():
            mb = r.module.basis
            entry: dict[str, Any] = {
                "module": _space_json(r.module),
                "matrices": {b[i]: _cols_json(LinearMap(r.module, r.module, r.rho[i]))
                             for i in range(len(b)) if np.count_nonzero(r.rho[i])}}
            for key in ("alpha", "beta"):
                op = getattr(r, key)
                if op is not None:
                    entry[key] = _cols_json(op)
            reps[name] = entry
        out["representations"] = reps
    if doc.operators:
        ops = {}
        for name, op in doc.operators.items():
            if op.domain.basis == doc.space.basis:
                ops[name] = _cols_json(op)
            else:
                dom = next((k for k, r in doc.representations.items() if r.module.basis == op.domain.basis), None)
                if dom is None:
                    raise DocumentError(f"operator {name!r} has a domain that is not a named module")
                ops[name] = {"domain": dom, "columns": _cols_json(op)}
        out["operators"] = ops
    if doc.forms:
        out["forms"] = {name: [[_s(v) for v in row] for row in f.matrix] for name, f in doc.forms.items()}
    if doc.coproducts:
        out["coproducts"] = {
            name: {b[i]: _tensor_json(b, b, d.coeffs[i]) for i in range(len(b)) if np.count_nonzero(d.coeffs[i])}
            for name, d in doc.coproducts.items()}
    if doc.tensors:
        out["tensors"] = {name: _tensor_json(b, b, t.coeffs) for name, t in doc.tensors.items()}
    if doc.published:
        out["published"] = {k: dict(v) for k, v in doc.published.items()}
    if doc.notes:
        out["notes"] = list(doc.notes)
    return out


def serialize(doc: StructureDocument | dict[str, StructureDocument]) -> str:
    if isinstance(doc, dict):
        raw = {"format": BUNDLE_FORMAT, "documents": {k: to_json(v) for k, v in doc.items()}}
    else:
        raw = to_json(doc)
    return json.dumps(raw, indent=2, ensure_ascii=False) + "\n"


def on_space(space: AnySpace, **sections: Any) -> StructureDocument:
    """Document for derived structures; dual spaces become concrete starred bases."""
    return StructureDocument(as_space(space), **sections)
