"""Exact rational linear algebra over named bases.

Scalars are ``fractions.Fraction``. Every coefficient array is a dense numpy
array of dtype ``object`` holding Fractions, frozen read-only on construction.

Coordinate conventions used everywhere in the package:

* a linear map stores its matrix with column ``j`` equal to the image of the
  ``j``-th domain basis vector, so ``M @ v`` applies it;
* a dual space shares the index order of its primal space, pairing is the
  Kronecker delta, and the transpose map has the transposed matrix;
* ``Tensor2`` coefficient ``t[a, b]`` multiplies ``e_a (x) e_b``;
* a coproduct stores ``d[i, a, b]``, the coefficient of ``e_a (x) e_b`` in
  the image of ``e_i``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

_SCALAR_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def scalar(value: ScalarLike) -> Fraction:
    """Coerce to an exact rational. Floats and decimal strings are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _SCALAR_RE.match(value):
            raise ValueError(f"not an exact rational: {value!r}")
        out = Fraction(value.replace(" ", ""))
        return out
    if isinstance(value, np.integer):
        return Fraction(int(value))
    raise TypeError(f"not an exact rational: {value!r}")


def format_scalar(value: Fraction) -> str:
    return str(value)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def qarray(data, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Frozen object array of Fractions built from nested data."""
    src = np.asarray(data, dtype=object)
    if shape is not None:
        src = src.reshape(shape)
    out = np.empty(src.shape, dtype=object)
    for idx, v in np.ndenumerate(src):
        out[idx] = scalar(v)
    return _freeze(out)


def zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def eye(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def frozen(arr: np.ndarray) -> np.ndarray:
    """Copy into a fresh frozen Fraction array (normalizes stray ints)."""
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = v if isinstance(v, Fraction) else scalar(v)
    return _freeze(out)


_to_int = np.frompyfunc(lambda v, d: v.numerator * (d // v.denominator), 2, 1)


def _scaled(arr: np.ndarray) -> tuple[np.ndarray, int]:
    arr = np.asarray(arr, dtype=object)
    if arr.size == 0:
        return arr, 1
    dens = {v.denominator for v in arr.flat}
    d = math.lcm(*dens)
    return np.asarray(_to_int(arr, d), dtype=object), d


def qeinsum(subscripts: str, *operands: np.ndarray) -> np.ndarray:
    """Exact einsum: clears denominators, contracts Python ints pairwise, rescales once."""
    ints, scale = [], 1
    for op in operands:
        a, d = _scaled(op)
        ints.append(a)
        scale *= d
    res = np.einsum(subscripts, *ints, optimize="greedy" if len(ints) > 2 else False)
    res = np.asarray(res, dtype=object)
    out = np.empty(res.shape, dtype=object)
    for idx, v in np.ndenumerate(res):
        out[idx] = Fraction(v, scale)
    return out


def is_zero(arr: np.ndarray) -> bool:
    return np.count_nonzero(arr) == 0


def block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, m = a.shape[0], b.shape[0]
    out = zeros(n + m, n + m)
    out[:n, :n] = a
    out[n:, n:] = b
    return out


# -- Gauss-Jordan over the rationals ---------------------------------------


def _row_reduce(m: np.ndarray) -> tuple[list[list[Fraction]], list[int], Fraction]:
    rows = [[Fraction(v) for v in row] for row in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    sign = Fraction(1)
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        sign *= p
        rows[r] = [v / p for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots, sign


def det(m: np.ndarray) -> Fraction:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    _, pivots, sign = _row_reduce(m)
    return sign if len(pivots) == n else Fraction(0)


def rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(_row_reduce(m)[1])


def inverse(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    aug = np.concatenate([np.asarray(m, dtype=object), eye(n)], axis=1)
    rows, pivots, _ = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise np.linalg.LinAlgError("singular matrix")
    return frozen(np.array([row[n:] for row in rows], dtype=object))


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve ``a @ x = b`` for square nonsingular ``a``; ``b`` may be 1-d or 2-d."""
    return frozen(inverse(a).dot(b))


def nullspace(m: np.ndarray) -> list[np.ndarray]:
    """Rational basis of the kernel of ``m``."""
    n_cols = m.shape[1]
    rows, pivots, _ = _row_reduce(m) if m.shape[0] else ([], [], Fraction(1))
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(frozen(np.array(v, dtype=object)))
    return basis


# -- spaces -------------------------------------------------------------------


@dataclass(frozen=True)
class Space:
    name: str
    basis: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis", tuple(self.basis))
        if len(set(self.basis)) != len(self.basis):
            raise ValueError(f"duplicate basis labels in space {self.name!r}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r} in space {self.name!r}") from None

    def dual(self) -> "DualSpace":
        return DualSpace(self)


@dataclass(frozen=True)
class DualSpace:
    primal: Space

    @property
    def name(self) -> str:
        return self.primal.name + "*"

    @property
    def basis(self) -> tuple[str, ...]:
        return tuple(label + "*" for label in self.primal.basis)

    @property
    def dim(self) -> int:
        return self.primal.dim

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def dual(self) -> Space:
        return self.primal


AnySpace = Union[Space, DualSpace]


def direct_sum(a: AnySpace, b: AnySpace, name: str | None = None) -> Space:
    """g basis first. Labels of b that clash with a are primed until unique."""
    labels = list(a.basis)
    taken = set(labels)
    for lab in b.basis:
        while lab in taken:
            lab += "'"
        taken.add(lab)
        labels.append(lab)
    return Space(name or f"{a.name}+{b.name}", tuple(labels))


def as_space(s: AnySpace) -> Space:
    """Concrete Space view with the same labels (dual spaces get starred labels)."""
    return s if isinstance(s, Space) else Space(s.name, s.basis)


# -- vectors, maps, tensors ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class Vector:
    space: AnySpace
    coords: np.ndarray

    def __post_init__(self) -> None:
        c = frozen(np.asarray(self.coords, dtype=object).reshape(-1))
        if c.shape != (self.space.dim,):
            raise ValueError("coordinate count does not match dimension")
        object.__setattr__(self, "coords", c)

    @classmethod
    def basis_vector(cls, space: AnySpace, i: int) -> "Vector":
        c = zeros(space.dim)
        c[i] = Fraction(1)
        return cls(space, c)

    @classmethod
    def from_dict(cls, space: AnySpace, coeffs: dict[str, ScalarLike]) -> "Vector":
        c = zeros(space.dim)
        for label, v in coeffs.items():
            c[space.index(label)] += scalar(v)
        return cls(space, c)

    def _check(self, other: "Vector") -> None:
        if other.space != self.space:
            raise ValueError("vectors live in different spaces")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.space, self.coords + other.coords)

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.space, self.coords - other.coords)

    def __neg__(self) -> "Vector":
        return Vector(self.space, -self.coords)

    def __rmul__(self, s: ScalarLike) -> "Vector":
        return Vector(self.space, self.coords * scalar(s))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Vector) and other.space == self.space
                and bool(np.all(other.coords == self.coords)))

    def is_zero(self) -> bool:
        return is_zero(self.coords)

    def to_dict(self) -> dict[str, Fraction]:
        return {lab: v for lab, v in zip(self.space.basis, self.coords) if v != 0}

    def __repr__(self) -> str:
        return f"Vector({format_combination(self.coords, self.space.basis)})"


def format_combination(coords: Iterable[Fraction], labels: Iterable[str]) -> str:
    """Render ``-3x+2h+y`` style linear combinations."""
    out = ""
    for v, lab in zip(coords, labels):
        if v == 0:
            continue
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        coeff = "" if mag == 1 else (str(mag) if mag.denominator == 1 else f"({mag})")
        out += f"{sign}{coeff}{lab}"
    if not out:
        return "0"
    return out[1:] if out[0] == "+" else out


@dataclass(frozen=True, eq=False)
class LinearMap:
    domain: AnySpace
    codomain: AnySpace
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = frozen(np.asarray(self.matrix, dtype=object))
        if m.shape != (self.codomain.dim, self.domain.dim):
            raise ValueError(
                f"matrix shape {m.shape} does not match "
                f"({self.codomain.dim}, {self.domain.dim})")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls, space: AnySpace) -> "LinearMap":
        return cls(space, space, eye(space.dim))

    @classmethod
    def zero(cls, domain: AnySpace, codomain: AnySpace | None = None) -> "LinearMap":
        codomain = domain if codomain is None else codomain
        return cls(domain, codomain, zeros(codomain.dim, domain.dim))

    @classmethod
    def from_columns(cls, domain: AnySpace, codomain: AnySpace,
                     columns: dict[str, dict[str, ScalarLike]]) -> "LinearMap":
        m = zeros(codomain.dim, domain.dim)
        for src, image in columns.items():
            j = domain.index(src)
            for lab, v in image.items():
                m[codomain.index(lab), j] += scalar(v)
        return cls(domain, codomain, m)

    def __call__(self, v: Vector) -> Vector:
        if v.space != self.domain:
            raise ValueError("vector is not in the domain of the map")
        return Vector(self.codomain, self.matrix.dot(v.coords))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.codomain != self.domain:
            raise ValueError("maps are not composable")
        return LinearMap(other.domain, self.codomain, self.matrix.dot(other.matrix))

    def _check(self, other: "LinearMap") -> None:
        if (other.domain, other.codomain) != (self.domain, self.codomain):
            raise ValueError("maps have different domains or codomains")

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._check(other)
        return LinearMap(self.domain, self.codomain, self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        self._check(other)
        return LinearMap(self.domain, self.codomain, self.matrix - other.matrix)

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.domain, self.codomain, -self.matrix)

    def __rmul__(self, s: ScalarLike) -> "LinearMap":
        return LinearMap(self.domain, self.codomain, self.matrix * scalar(s))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LinearMap) and other.domain == self.domain
                and other.codomain == self.codomain
                and bool(np.all(other.matrix == self.matrix)))

    @property
    def T(self) -> "LinearMap":
        return transpose_map(self)

    def column(self, j: int) -> Vector:
        return Vector(self.codomain, self.matrix[:, j])

    def columns_dict(self) -> dict[str, dict[str, Fraction]]:
        return {lab: self.column(j).to_dict() for j, lab in enumerate(self.domain.basis)}


def direct_sum_map(a: LinearMap, b: LinearMap, space: Space) -> LinearMap:
    """Block-diagonal operator a (+) b on a direct-sum space."""
    return LinearMap(space, space, block_diag(a.matrix, b.matrix))


def transpose_map(t: LinearMap) -> LinearMap:
    return LinearMap(t.codomain.dual(), t.domain.dual(), t.matrix.T.copy())


@dataclass(frozen=True, eq=False)
class Tensor2:
    left: AnySpace
    right: AnySpace
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = frozen(np.asarray(self.coeffs, dtype=object))
        if c.shape != (self.left.dim, self.right.dim):
            raise ValueError("tensor shape does not match factor dimensions")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, left: AnySpace, right: AnySpace | None = None) -> "Tensor2":
        right = left if right is None else right
        return cls(left, right, zeros(left.dim, right.dim))

    @classmethod
    def pure(cls, u: Vector, v: Vector) -> "Tensor2":
        return cls(u.space, v.space, np.multiply.outer(u.coords, v.coords))

    @classmethod
    def from_entries(cls, left: AnySpace, right: AnySpace,
                     entries: Iterable[tuple[str, str, ScalarLike]]) -> "Tensor2":
        c = zeros(left.dim, right.dim)
        for a, b, v in entries:
            c[left.index(a), right.index(b)] += scalar(v)
        return cls(left, right, c)

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.left, self.right, self.coeffs + other.coeffs)

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.left, self.right, self.coeffs - other.coeffs)

    def __neg__(self) -> "Tensor2":
        return Tensor2(self.left, self.right, -self.coeffs)

    def __rmul__(self, s: ScalarLike) -> "Tensor2":
        return Tensor2(self.left, self.right, self.coeffs * scalar(s))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Tensor2) and (other.left, other.right) == (self.left, self.right)
                and bool(np.all(other.coeffs == self.coeffs)))

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)

    def is_antisymmetric(self) -> bool:
        return self.left == self.right and is_zero(self.coeffs + self.coeffs.T)


@dataclass(frozen=True, eq=False)
class Tensor3:
    spaces: tuple[AnySpace, AnySpace, AnySpace]
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "spaces", tuple(self.spaces))
        c = frozen(np.asarray(self.coeffs, dtype=object))
        if c.shape != tuple(s.dim for s in self.spaces):
            raise ValueError("tensor shape does not match factor dimensions")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def pure(cls, u: Vector, v: Vector, w: Vector) -> "Tensor3":
        c = np.multiply.outer(np.multiply.outer(u.coords, v.coords), w.coords)
        return cls((u.space, v.space, w.space), c)

    def __add__(self, other: "Tensor3") -> "Tensor3":
        return Tensor3(self.spaces, self.coeffs + other.coeffs)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Tensor3) and other.spaces == self.spaces
                and bool(np.all(other.coeffs == self.coeffs)))

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)


def flip(t: Tensor2) -> Tensor2:
    return Tensor2(t.right, t.left, t.coeffs.T.copy())


def cyclic_shift(t: Tensor3) -> Tensor3:
    """x (x) y (x) z -> z (x) x (x) y."""
    a, b, c = t.spaces
    if not (a == b == c):
        raise ValueError("cyclic shift needs three equal factors")
    return Tensor3(t.spaces, t.coeffs.transpose(2, 0, 1).copy())


def cyclic_sum(arr: np.ndarray) -> np.ndarray:
    """(id + sigma + sigma^2) on the last three axes of a coefficient array."""
    lead = tuple(range(arr.ndim - 3))
    k = arr.ndim - 3
    s1 = arr.transpose(*lead, k + 2, k, k + 1)
    s2 = arr.transpose(*lead, k + 1, k + 2, k)
    return arr + s1 + s2


def map_from_tensor(t: Tensor2) -> LinearMap:
    """T_t(e_i*) = sum_j t[i, j] e_j, a map from the dual of the left factor."""
    if t.left != t.right:
        raise ValueError("both tensor factors must be the same space")
    return LinearMap(t.left.dual(), t.right, t.coeffs.T.copy())


def tensor_from_map(m: LinearMap) -> Tensor2:
    space = m.codomain
    if m.domain != space.dual():
        raise ValueError("map must go from the dual of a space to that space")
    return Tensor2(space, space, m.matrix.T.copy())


@dataclass(frozen=True, eq=False)
class Coproduct:
    space: AnySpace
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        n = self.space.dim
        c = frozen(np.asarray(self.coeffs, dtype=object))
        if c.shape != (n, n, n):
            raise ValueError("coproduct shape does not match the space")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, space: AnySpace) -> "Coproduct":
        n = space.dim
        return cls(space, zeros(n, n, n))

    def column(self, i: int) -> Tensor2:
        return Tensor2(self.space, self.space, self.coeffs[i])

    def __add__(self, other: "Coproduct") -> "Coproduct":
        return Coproduct(self.space, self.coeffs + other.coeffs)

    def __sub__(self, other: "Coproduct") -> "Coproduct":
        return Coproduct(self.space, self.coeffs - other.coeffs)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Coproduct) and other.space == self.space
                and bool(np.all(other.coeffs == self.coeffs)))

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)


def apply_coproduct(c: Coproduct, v: Vector) -> Tensor2:
    if v.space != c.space:
        raise ValueError("vector is not in the coproduct's domain")
    return Tensor2(c.space, c.space, qeinsum("i,iab->ab", v.coords, c.coeffs))
