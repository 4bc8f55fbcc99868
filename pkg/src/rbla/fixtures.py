"""Reference structures: sl(2) with its published operator, small 2-dimensional algebras."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .exact import LinearMap, Space
from .lie import BilinearForm, BilinearProduct, LieAlgebra
from .rota_baxter import RBLieAlgebra

SL2 = Space("g", ("x", "h", "y"))


def sl2() -> LieAlgebra:
    table = [("h", "x", {"x": 2}), ("h", "y", {"y": -2}), ("x", "y", {"h": 1})]
    return LieAlgebra(BilinearProduct.from_table(SL2, table, antisymmetrize=True))


def sl2_operator() -> LinearMap:
    return LinearMap.from_columns(SL2, SL2, {
        "x": {"x": 1, "y": 1},
        "h": {"h": 2, "y": 4},
        "y": {"x": 1, "h": -2, "y": -3},
    })


def sl2_form() -> BilinearForm:
    return BilinearForm(SL2, [[0, 0, 1], [0, 2, 0], [1, 0, 0]])


def sl2_rb(Q: LinearMap | None = None) -> RBLieAlgebra:
    return RBLieAlgebra(sl2(), Fraction(0), sl2_operator(), Q)


# published tables, as (left, right) -> linear combination string
SL2_PHAT = {"x": "-3x+2h+y", "h": "-4x+2h", "y": "x+y"}
SL2_PRELIE = {
    ("x", "x"): "-h", ("x", "h"): "-2x+2y", ("x", "y"): "h",
    ("h", "x"): "4x-4h", ("h", "h"): "8y", ("h", "y"): "-4y",
    ("y", "x"): "3h-4y", ("y", "y"): "h+4y", ("y", "h"): "-2x-6y",
}
SL2_TRI_L = {("x", "h"): "-6x+4h+2y", ("x", "y"): "4x-2h", ("h", "y"): "2x+2y"}


AB2 = Space("a", ("e1", "e2"))
NA2 = Space("n", ("e1", "e2"))


def ab2() -> LieAlgebra:
    return LieAlgebra(BilinearProduct.zero(AB2))


def na2() -> LieAlgebra:
    return LieAlgebra(BilinearProduct.from_table(NA2, [("e1", "e2", {"e1": 1})], antisymmetrize=True))


@dataclass(frozen=True)
class CorpusEntry:
    weight: Fraction
    matrix: tuple[tuple[int, int], tuple[int, int]]

    def rb(self) -> RBLieAlgebra:
        P = LinearMap(NA2, NA2, [list(r) for r in self.matrix])
        return RBLieAlgebra(na2(), self.weight, P)


def na2_corpus() -> list[CorpusEntry]:
    """Brute-force enumerated Rota-Baxter operators on the 2-dim non-abelian algebra."""
    raw = json.loads(resources.files("rbla").joinpath("data/na2_corpus.json").read_text())
    return [CorpusEntry(Fraction(e["weight"]), tuple(tuple(r) for r in e["matrix"]))
            for e in raw["operators"]]
