"""Algebra presentations, their verification, and the linear constructions
between kinds (subadjacent structures, embeddings, defect maps)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .catalog import KINDS, F1, F2, F3, hm_P
from .core import (BilinearProduct, Space, StructuralError, UnsupportedKind, Vector, combine, flip,
                   scale_product)
from .expr import Context, Identity, as_expr, evaluate_side, variables
from .report import VerificationReport, check_identities
from .tensor import QTensor


@dataclass(frozen=True)
class AlgebraPresentation:
    kind: str
    space: Space
    products: Mapping[str, BilinearProduct]
    metadata: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedKind(f"unknown structure kind {self.kind!r}")
        want = set(KINDS[self.kind].slots)
        have = set(self.products)
        if want != have:
            raise StructuralError(
                f"{self.kind} needs products {sorted(want)}, got {sorted(have)}")
        for slot, P in self.products.items():
            if P.left != self.space or P.right != self.space or P.codomain != self.space:
                raise StructuralError(f"product {slot!r} is not a product on the algebra's space")
        object.__setattr__(self, "products", dict(sorted(self.products.items())))

    def __getitem__(self, slot: str) -> BilinearProduct:
        return self.products[slot]

    def retag(self, kind: str, metadata: str | None = None) -> "AlgebraPresentation":
        return AlgebraPresentation(kind, self.space, self.products,
                                   self.metadata if metadata is None else metadata)

    def equals(self, other: "AlgebraPresentation") -> bool:
        return (self.kind == other.kind and self.space == other.space
                and self.products.keys() == other.products.keys()
                and all(self.products[s] == other.products[s] for s in self.products))


def zero_structure(kind: str, space: Space, metadata: str = "") -> AlgebraPresentation:
    return AlgebraPresentation(kind, space, {s: BilinearProduct.zero(space) for s in KINDS[kind].slots}, metadata)


def linear_recipe(products: Mapping[str, BilinearProduct], recipe, space: Space) -> BilinearProduct:
    """Combination of slots and their flips; recipe items are (c, slot, flipped)."""
    terms = []
    for c, slot, flipped in recipe:
        P = products[slot]
        terms.append((c, flip(P) if flipped else P))
    if not terms:
        return BilinearProduct.zero(space)
    return combine(terms)


def derived_products(A: AlgebraPresentation) -> dict[str, BilinearProduct]:
    return {name: linear_recipe(A.products, recipe, A.space)
            for name, recipe in KINDS[A.kind].derived.items()}


def context_for(A: AlgebraPresentation, maps: Mapping[str, QTensor] | None = None,
                extra: Mapping[str, BilinearProduct] | None = None, dims=None) -> Context:
    prods = dict(A.products)
    prods.update(derived_products(A))
    if extra:
        prods.update(extra)
    series = {s: [P.tensor] for s, P in prods.items()}
    return Context(series, dims or {"A": A.space.dim}, dict(maps or {}))


def verify_structure(A: AlgebraPresentation) -> VerificationReport:
    ctx = context_for(A)
    return check_identities(f"{A.kind} structure", KINDS[A.kind].identities, ctx, {"A": A.space})


def product_from(ctx: Context, space: Space, expr, vars_=("x", "y"), roles=("A", "A"),
                 out_role="A", codomain: Space | None = None, left: Space | None = None,
                 right: Space | None = None) -> BilinearProduct:
    """The bilinear map (x, y) -> expr as structure constants."""
    ident = Identity("product", tuple(vars_), as_expr(expr), as_expr(0), tuple(roles), out_role)
    t = evaluate_side(ctx, ident, ident.lhs)[0]
    return BilinearProduct(left or space, right or space, codomain or space, t)


def multilinear_tensor(ctx: Context, expr, vars_, roles=None, out_role="A") -> QTensor:
    roles = roles or ("A",) * len(vars_)
    ident = Identity("map", tuple(vars_), as_expr(expr), as_expr(0), tuple(roles), out_role)
    return evaluate_side(ctx, ident, ident.lhs)[0]


def apply_multilinear(t: QTensor, vectors, out_space: Space) -> Vector:
    vals = t.to_fractions()
    out = [Fraction(0)] * out_space.dim
    for idx, c in _nonzero(vals):
        coeff = c
        for v, i in zip(vectors, idx[:-1]):
            coeff *= v.coords[i]
            if not coeff:
                break
        if coeff:
            out[idx[-1]] += coeff
    return Vector(out_space, out)


def _nonzero(arr):
    for idx, c in np.ndenumerate(arr):
        if c:
            yield idx, c


# subadjacent: source kind -> (target kind, {slot: recipe})
_F, _T = False, True
SUBADJACENT = {
    "ns-commutative": ("commutative-associative", {"dot": "odot"}),
    "ns-lie": ("lie", {"bracket": "dcb"}),
    "ns-poisson": ("poisson", {"dot": "odot", "bracket": "dcb"}),
    "ns-f-manifold": ("f-manifold", {"dot": "odot", "bracket": "dcb"}),
    "ns-associative": ("associative", {"dot": "odot"}),
    "ns-pre-lie": ("ns-lie", {"diamond": ((1, "rtri", _F), (-1, "ltri", _T)),
                              "blackdiamond": ((1, "circ", _F), (-1, "circ", _T))}),
    "l-dendriform": ("pre-lie", {"diamond": ((1, "rtri", _F), (-1, "ltri", _T))}),
    "pre-poisson": ("poisson", {"dot": ((1, "star", _F), (1, "star", _T)),
                                "bracket": ((1, "diamond", _F), (-1, "diamond", _T))}),
    "zinbiel": ("commutative-associative", {"dot": ((1, "star", _F), (1, "star", _T))}),
    "pre-lie": ("lie", {"bracket": ((1, "diamond", _F), (-1, "diamond", _T))}),
}

EMBEDDINGS = {
    ("zinbiel", "ns-commutative"): {"star": ((1, "star", _F),), "vee": ()},
    ("pre-lie", "ns-lie"): {"diamond": ((1, "diamond", _F),), "blackdiamond": ()},
    ("pre-poisson", "ns-poisson"): {"star": ((1, "star", _F),), "diamond": ((1, "diamond", _F),),
                                    "vee": (), "blackdiamond": ()},
    ("poisson", "ns-poisson"): {"star": (), "diamond": (), "vee": ((1, "dot", _F),),
                                "blackdiamond": ((1, "bracket", _F),)},
    ("commutative-associative", "ns-commutative"): {"star": (), "vee": ((1, "dot", _F),)},
    ("lie", "ns-lie"): {"diamond": (), "blackdiamond": ((1, "bracket", _F),)},
    ("ns-commutative", "ns-associative"): {"succ": ((1, "star", _F),), "prec": ((1, "star", _T),),
                                           "vee": ((1, "vee", _F),)},
    ("ns-associative", "ns-pre-lie"): {"rtri": ((1, "succ", _F),), "ltri": ((1, "prec", _F),),
                                       "circ": ((1, "vee", _F),)},
    ("zinbiel", "l-dendriform"): {"rtri": ((1, "star", _F),), "ltri": ((1, "star", _T),)},
    ("l-dendriform", "ns-pre-lie"): {"rtri": ((1, "rtri", _F),), "ltri": ((1, "ltri", _F),), "circ": ()},
    ("poisson", "f-manifold"): None,
    ("ns-poisson", "ns-f-manifold"): None,
    ("commutative-associative", "associative"): None,
}


def subadjacent(A: AlgebraPresentation) -> AlgebraPresentation:
    if A.kind not in SUBADJACENT:
        raise UnsupportedKind(f"{A.kind} has no subadjacent structure")
    target, recipes = SUBADJACENT[A.kind]
    derived = derived_products(A)
    out = {}
    for slot, recipe in recipes.items():
        out[slot] = derived[recipe] if isinstance(recipe, str) else linear_recipe(A.products, recipe, A.space)
    return AlgebraPresentation(target, A.space, out, f"subadjacent of {A.kind}")


def embed(A: AlgebraPresentation, target: str) -> AlgebraPresentation:
    key = (A.kind, target)
    if key not in EMBEDDINGS:
        raise UnsupportedKind(f"no embedding of {A.kind} into {target}")
    recipes = EMBEDDINGS[key]
    if recipes is None:
        return A.retag(target, f"{A.kind} viewed as {target}")
    out = {slot: linear_recipe(A.products, r, A.space) for slot, r in recipes.items()}
    return AlgebraPresentation(target, A.space, out, f"{A.kind} embedded as {target}")


def _need(A: AlgebraPresentation, slots):
    missing = [s for s in slots if s not in A.products]
    if missing:
        raise StructuralError(f"{A.kind} lacks products {missing}")


def hertling_manin_tensor(A: AlgebraPresentation) -> QTensor:
    _need(A, ("dot", "bracket"))
    x, y, z = variables("x", "y", "z")
    return multilinear_tensor(context_for(A), hm_P(x, y, z), ("x", "y", "z"))


def hertling_manin_P(A: AlgebraPresentation, x: Vector, y: Vector, z: Vector) -> Vector:
    return apply_multilinear(hertling_manin_tensor(A), (x, y, z), A.space)


def f_defect_tensors(A: AlgebraPresentation) -> tuple[QTensor, QTensor, QTensor]:
    _need(A, ("star", "vee", "diamond", "blackdiamond"))
    ctx = context_for(A.retag("ns-f-manifold") if A.kind != "ns-f-manifold" else A)
    x, y, z = variables("x", "y", "z")
    v = ("x", "y", "z")
    return tuple(multilinear_tensor(ctx, F(x, y, z), v) for F in (F1, F2, F3))


def f_defects(A: AlgebraPresentation, x: Vector, y: Vector, z: Vector) -> tuple[Vector, Vector, Vector]:
    return tuple(apply_multilinear(t, (x, y, z), A.space) for t in f_defect_tensors(A))


def add_structures(A: AlgebraPresentation, B: AlgebraPresentation) -> AlgebraPresentation:
    if A.kind != B.kind:
        raise StructuralError(f"cannot add a {A.kind} structure to a {B.kind} structure")
    if A.space != B.space:
        raise StructuralError("cannot add structures on different spaces")
    out = {s: combine([(1, A[s]), (1, B[s])]) for s in A.products}
    return AlgebraPresentation(A.kind, A.space, out, "sum")


def sum_and_check_compatible(A: AlgebraPresentation, B: AlgebraPresentation):
    S = add_structures(A, B)
    return S, verify_structure(S)


def scale_structure(c, A: AlgebraPresentation) -> AlgebraPresentation:
    return AlgebraPresentation(A.kind, A.space, {s: scale_product(c, P) for s, P in A.products.items()},
                               A.metadata)
