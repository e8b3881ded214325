"""Spaces, vectors, bilinear products and linear maps over the rationals."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .tensor import QTensor

NONE, SYMMETRIC, SKEW = "none", "symmetric", "skew"
SYMMETRIES = (NONE, SYMMETRIC, SKEW)

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class StructuralError(ValueError):
    """Malformed input: a bad file, not a false theorem."""


class UnsupportedKind(StructuralError):
    pass


class PreconditionError(Exception):
    """A verifier that had to pass first did not; carries its report."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Space:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise StructuralError(f"duplicate basis names in {self.names}")
        for n in self.names:
            if not _NAME.match(n):
                raise StructuralError(f"basis name {n!r} is not an identifier")

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructuralError(f"unknown basis element {name!r}") from None

    def basis(self, i) -> "Vector":
        if isinstance(i, str):
            i = self.index(i)
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Vector(self, coords)

    def zero(self) -> "Vector":
        return Vector(self, [Fraction(0)] * self.dim)


class Vector:
    __slots__ = ("space", "coords")

    def __init__(self, space: Space, coords: Sequence):
        if len(coords) != space.dim:
            raise StructuralError(f"expected {space.dim} coordinates, got {len(coords)}")
        self.space = space
        self.coords = tuple(Fraction(c) for c in coords)

    def __eq__(self, other):
        return isinstance(other, Vector) and self.space == other.space and self.coords == other.coords

    def __hash__(self):
        return hash((self.space, self.coords))

    def __add__(self, other: "Vector") -> "Vector":
        _same(self.space, other.space)
        return Vector(self.space, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Vector") -> "Vector":
        _same(self.space, other.space)
        return Vector(self.space, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Vector":
        return Vector(self.space, [-a for a in self.coords])

    def __rmul__(self, c) -> "Vector":
        c = Fraction(c)
        return Vector(self.space, [c * a for a in self.coords])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_dict(self) -> dict[str, Fraction]:
        return {n: c for n, c in zip(self.space.names, self.coords) if c}

    def __repr__(self):
        terms = [f"{c}*{n}" for n, c in self.as_dict().items()]
        return " + ".join(terms) if terms else "0"


def _same(a: Space, b: Space):
    if a != b:
        raise StructuralError(f"space mismatch: {a.names} vs {b.names}")


def _classify(t: QTensor) -> str:
    flipped = t.num.transpose(1, 0, 2)
    if t.shape[0] != t.shape[1]:
        return NONE
    if (t.num == flipped).all():
        return SYMMETRIC
    if (t.num == -flipped).all():
        return SKEW
    return NONE


class BilinearProduct:
    """e_i (x) f_j = sum_k c[i][j][k] g_k for bases of left, right, out."""

    __slots__ = ("left", "right", "codomain", "tensor", "symmetry")

    def __init__(self, left: Space, right: Space, codomain: Space, tensor: QTensor, symmetry: str | None = None):
        if tensor.shape != (left.dim, right.dim, codomain.dim):
            raise StructuralError(
                f"constant array of shape {tensor.shape} does not match "
                f"({left.dim}, {right.dim}, {codomain.dim})")
        self.left, self.right, self.codomain, self.tensor = left, right, codomain, tensor
        found = _classify(tensor) if left == right else NONE
        if symmetry is None:
            symmetry = found
        elif symmetry not in SYMMETRIES:
            raise StructuralError(f"unknown symmetry flag {symmetry!r}")
        elif symmetry != NONE and symmetry != found:
            # the zero product is both; it reports symmetric but honours skew too
            if not (symmetry == SKEW and tensor.is_zero()):
                raise StructuralError(f"product declared {symmetry} but its constants are not")
        self.symmetry = symmetry

    @classmethod
    def on(cls, space: Space, constants, codomain: Space | None = None, symmetry=None) -> "BilinearProduct":
        codomain = codomain or space
        return cls(space, space, codomain, QTensor.from_fractions(constants), symmetry)

    @classmethod
    def zero(cls, space: Space, codomain: Space | None = None, right: Space | None = None) -> "BilinearProduct":
        codomain = codomain or space
        right = right or space
        return cls(space, right, codomain, QTensor.zeros((space.dim, right.dim, codomain.dim)))

    @classmethod
    def from_entries(cls, left: Space, right: Space, codomain: Space,
                     entries: Iterable[tuple[str, str, str, object]], symmetry=None) -> "BilinearProduct":
        arr = np.full((left.dim, right.dim, codomain.dim), Fraction(0), dtype=object)
        for i, j, k, c in entries:
            arr[left.index(i), right.index(j), codomain.index(k)] += Fraction(c)
        return cls(left, right, codomain, QTensor.from_fractions(arr), symmetry)

    @property
    def domain(self) -> Space:
        _same(self.left, self.right)
        return self.left

    def constant(self, i: int, j: int, k: int) -> Fraction:
        return self.tensor[i, j, k]

    def constants(self) -> np.ndarray:
        return self.tensor.to_fractions()

    def entries(self):
        """Sparse (i, j, k, value) quadruples, by index."""
        out = []
        for (i, j, k), v in np.ndenumerate(self.tensor.num):
            if v:
                out.append((i, j, k, Fraction(v, self.tensor.den)))
        return out

    def __eq__(self, other):
        return (isinstance(other, BilinearProduct) and self.left == other.left
                and self.right == other.right and self.codomain == other.codomain
                and self.tensor.equals(other.tensor))

    def __repr__(self):
        return f"BilinearProduct({self.symmetry}, {len(self.entries())} nonzero)"

    def is_zero(self) -> bool:
        return self.tensor.is_zero()


def eval_product(P: BilinearProduct, x: Vector, y: Vector) -> Vector:
    _same(x.space, P.left)
    _same(y.space, P.right)
    out = [Fraction(0)] * P.codomain.dim
    for i, j, k, c in P.entries():
        xi, yj = x.coords[i], y.coords[j]
        if xi and yj:
            out[k] += xi * yj * c
    return Vector(P.codomain, out)


def flip(P: BilinearProduct) -> BilinearProduct:
    return BilinearProduct(P.right, P.left, P.codomain, P.tensor.transpose(1, 0, 2))


def combine(terms: Sequence[tuple[object, BilinearProduct]]) -> BilinearProduct:
    if not terms:
        raise StructuralError("combine needs at least one term")
    c0, P0 = terms[0]
    acc = P0.tensor.scale(c0)
    for c, P in terms[1:]:
        if (P.left, P.right, P.codomain) != (P0.left, P0.right, P0.codomain):
            raise StructuralError("combine: products live on different spaces")
        acc = acc + P.tensor.scale(c)
    return BilinearProduct(P0.left, P0.right, P0.codomain, acc)


def scale_product(c, P: BilinearProduct) -> BilinearProduct:
    return combine([(c, P)])


def symmetry_of(P: BilinearProduct) -> str:
    if P.left != P.right:
        return NONE
    return _classify(P.tensor)


class LinearMap:
    """f(e_j) = sum_i M[i][j] g_i, i.e. columns are images."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Space, target: Space, matrix: QTensor):
        if matrix.shape != (target.dim, source.dim):
            raise StructuralError(
                f"matrix of shape {matrix.shape} does not map {source.dim} -> {target.dim}")
        self.source, self.target, self.matrix = source, target, matrix

    @classmethod
    def from_images(cls, source: Space, target: Space, images: dict[str, dict[str, object]]):
        arr = np.full((target.dim, source.dim), Fraction(0), dtype=object)
        for src, img in images.items():
            j = source.index(src)
            for tgt, c in img.items():
                arr[target.index(tgt), j] += Fraction(c)
        return cls(source, target, QTensor.from_fractions(arr))

    @classmethod
    def from_rows(cls, source: Space, target: Space, rows):
        return cls(source, target, QTensor.from_fractions(rows))

    def __call__(self, v: Vector) -> Vector:
        _same(v.space, self.source)
        m = self.matrix
        out = []
        for i in range(self.target.dim):
            out.append(sum((m[i, j] * v.coords[j] for j in range(self.source.dim) if v.coords[j]), Fraction(0)))
        return Vector(self.target, out)

    def entry(self, i: int, j: int) -> Fraction:
        return self.matrix[i, j]

    def rows(self) -> np.ndarray:
        return self.matrix.to_fractions()

    def images(self) -> dict[str, dict[str, Fraction]]:
        out = {}
        for j, src in enumerate(self.source.names):
            img = {self.target.names[i]: self.matrix[i, j]
                   for i in range(self.target.dim) if self.matrix.num[i, j]}
            if img:
                out[src] = img
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        _same(other.target, self.source)
        m = self.matrix.matmul(other.matrix)
        if other.source == self.target:
            return OperatorMatrix(other.source, self.target, m)
        return LinearMap(other.source, self.target, m)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        _same(self.source, other.source)
        _same(self.target, other.target)
        return type(self)(self.source, self.target, self.matrix + other.matrix)

    def scale(self, c) -> "LinearMap":
        return type(self)(self.source, self.target, self.matrix.scale(c))

    def __eq__(self, other):
        return (isinstance(other, LinearMap) and self.source == other.source
                and self.target == other.target and self.matrix.equals(other.matrix))

    def __repr__(self):
        return f"{type(self).__name__}({self.images()})"


class OperatorMatrix(LinearMap):
    """Square operator N : A -> A (N, R, D, Id, N^k)."""

    def __init__(self, source: Space, target: Space | None = None, matrix: QTensor | None = None):
        target = source if target is None else target
        _same(source, target)
        if matrix is None:
            matrix = QTensor.zeros((source.dim, source.dim))
        super().__init__(source, target, matrix)

    @property
    def space(self) -> Space:
        return self.source

    @classmethod
    def identity(cls, space: Space, c=1) -> "OperatorMatrix":
        return cls(space, space, QTensor.identity(space.dim).scale(c))

    @classmethod
    def of_images(cls, space: Space, images: dict[str, dict[str, object]]) -> "OperatorMatrix":
        m = LinearMap.from_images(space, space, images)
        return cls(space, space, m.matrix)

    @classmethod
    def of_rows(cls, space: Space, rows) -> "OperatorMatrix":
        return cls(space, space, QTensor.from_fractions(rows))

    def power(self, k: int) -> "OperatorMatrix":
        if k < 0:
            raise StructuralError("operator powers must be non-negative")
        out = OperatorMatrix.identity(self.space)
        for _ in range(k):
            out = OperatorMatrix(self.space, self.space, self.matrix.matmul(out.matrix))
        return out


class ModuleMap(LinearMap):
    """Rectangular map R : V -> A."""
