"""Check reports: every violation with its equation tag, basis witness and exact defect."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Sequence

import numpy as np


@dataclass(frozen=True)
class Violation:
    equation: str
    witness: tuple[str, ...]
    defect: tuple[Fraction, ...]
    labels: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"equation": self.equation, "witness": list(self.witness)}
        if self.labels:
            out["defect"] = {lab: str(v) for lab, v in zip(self.labels, self.defect) if v != 0}
        else:
            out["defect"] = [str(v) for v in self.defect]
        return out

    def __str__(self) -> str:
        return f"{self.equation} at ({', '.join(self.witness)})"


@dataclass
class CheckReport:
    name: str
    violations: list[Violation] = field(default_factory=list)
    children: list["CheckReport"] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations and all(c.passed for c in self.children)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def add(self, child: "CheckReport") -> "CheckReport":
        self.children.append(child)
        return child

    def all_violations(self) -> list[Violation]:
        out = list(self.violations)
        for c in self.children:
            out.extend(c.all_violations())
        return out

    def find(self, name: str) -> "CheckReport | None":
        if self.name == name:
            return self
        for c in self.children:
            hit = c.find(name)
            if hit is not None:
                return hit
        return None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.name,
            "verdict": self.verdict,
            "violations": [v.to_dict() for v in self.violations],
            "seconds": round(self.seconds, 6),
        }
        if self.info:
            out["info"] = {k: _jsonable(v) for k, v in self.info.items()}
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def summary_lines(self, indent: int = 0) -> list[str]:
        pad = "  " * indent
        lines = [f"{pad}{self.verdict.upper():4}  {self.name}"]
        for v in self.violations[:5]:
            lines.append(f"{pad}      {v}")
        if len(self.violations) > 5:
            lines.append(f"{pad}      ... {len(self.violations) - 5} more")
        for c in self.children:
            lines.extend(c.summary_lines(indent + 1))
        return lines


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


class StructureError(ValueError):
    """A construction whose preconditions fail; carries the failing report."""

    def __init__(self, message: str, report: CheckReport | None = None) -> None:
        if report is not None and report.all_violations():
            message = f"{message}: {report.all_violations()[0]}"
        super().__init__(message)
        self.report = report


@contextmanager
def timed(report: CheckReport) -> Iterator[CheckReport]:
    t0 = time.perf_counter()
    yield report
    report.seconds = time.perf_counter() - t0


def collect(report: CheckReport, equation: str, defect: np.ndarray,
            axis_labels: Sequence[Sequence[str]], out_labels: Sequence[str] = (),
            keep=None) -> CheckReport:
    """Turn a defect array into violations.

    ``defect`` has one leading axis per witness slot (labelled by
    ``axis_labels``) followed by the defect coefficient axes, which are
    flattened. ``keep`` optionally filters witness index tuples.
    """
    k = len(axis_labels)
    lead = defect.shape[:k]
    flat = defect.reshape(lead + (-1,))
    nz = np.count_nonzero(flat.reshape(-1, flat.shape[-1]) if flat.size else flat, axis=-1)
    nz = nz.reshape(lead)
    for idx in zip(*np.nonzero(nz)):
        idx = tuple(int(i) for i in idx)
        if keep is not None and not keep(idx):
            continue
        witness = tuple(axis_labels[s][i] for s, i in enumerate(idx))
        vals = tuple(Fraction(v) for v in flat[idx])
        report.violations.append(Violation(equation, witness, vals, tuple(out_labels)))
    return report


def tensor_labels(*spaces_basis: Sequence[str]) -> list[str]:
    """Labels for flattened tensor coefficients, e.g. ``x(x)h``."""
    labels = [""]
    for basis in spaces_basis:
        labels = [f"{a}(x){b}" if a else b for a in labels for b in basis]
    return labels
