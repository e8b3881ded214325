"""Z-graded structures with Koszul signs: Gerstenhaber and NS-Gerstenhaber.

Bracket-type products carry a degree shift s (normally -1); with
sigma = -s the printed exponents (|x|-1) become (|x|-sigma), so degree-0
data with shift 0 reduces every graded identity to its ungraded form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

import numpy as np

from .catalog import nijenhuis_identity
from .core import BilinearProduct, OperatorMatrix, PreconditionError, Space, StructuralError, UnsupportedKind
from .expr import Context, deg, identity, lin, op, variables
from .report import VerificationReport, check_identities
from .structures import AlgebraPresentation, product_from
from .tensor import QTensor

GRADED_SLOTS = {
    "gerstenhaber": ("dot", "bracket"),
    "graded-ns-commutative": ("star", "vee"),
    "graded-ns-lie": ("diamond", "blackdiamond"),
    "ns-gerstenhaber": ("star", "vee", "diamond", "blackdiamond"),
}
BRACKET_TYPE = {"bracket", "diamond", "blackdiamond"}


def default_shift(slot: str) -> int:
    return -1 if slot in BRACKET_TYPE else 0


@dataclass(frozen=True)
class GradedPresentation:
    kind: str
    space: Space
    degrees: tuple[int, ...]
    products: Mapping[str, BilinearProduct]
    shifts: Mapping[str, int] = field(default_factory=dict)
    metadata: str = ""

    def __post_init__(self):
        if self.kind not in GRADED_SLOTS:
            raise UnsupportedKind(f"unknown graded kind {self.kind!r}")
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if len(self.degrees) != self.space.dim:
            raise StructuralError("one degree per basis element is required")
        if set(self.products) != set(GRADED_SLOTS[self.kind]):
            raise StructuralError(f"{self.kind} needs products {sorted(GRADED_SLOTS[self.kind])}")
        shifts = {s: int(self.shifts.get(s, default_shift(s))) for s in self.products}
        if len({shifts[s] for s in shifts if s in BRACKET_TYPE}) > 1:
            raise StructuralError("bracket-type products must share one degree shift")
        if any(shifts[s] != 0 for s in shifts if s not in BRACKET_TYPE):
            raise StructuralError("products of commutative type have degree 0")
        object.__setattr__(self, "shifts", dict(sorted(shifts.items())))
        object.__setattr__(self, "products", dict(sorted(self.products.items())))
        d = np.array(self.degrees, dtype=np.int64)
        for slot, P in self.products.items():
            if (P.left, P.right, P.codomain) != (self.space,) * 3:
                raise StructuralError(f"product {slot!r} is not on the graded space")
            expected = d[:, None, None] + d[None, :, None] + shifts[slot]
            bad = (P.tensor.num != 0) & (expected != d[None, None, :])
            if bad.any():
                i, j, k = (int(v) for v in np.argwhere(bad)[0])
                n = self.space.names
                raise StructuralError(f"product {slot!r} is not homogeneous: {n[i]} {n[j]} -> {n[k]}")

    def __getitem__(self, slot: str) -> BilinearProduct:
        return self.products[slot]

    @property
    def sigma(self) -> int:
        for s in sorted(BRACKET_TYPE & set(self.shifts)):
            return -self.shifts[s]
        return 1

    def equals(self, other: "GradedPresentation") -> bool:
        return (self.kind == other.kind and self.space == other.space and self.degrees == other.degrees
                and self.shifts == other.shifts
                and all(self.products[s] == other.products[s] for s in self.products))


x, y, z = variables("x", "y", "z")
dot, bracket = op("dot"), op("bracket")
star, vee, diamond, bd = op("star"), op("vee"), op("diamond"), op("blackdiamond")
dx, dy, dz = deg("x"), deg("y"), deg("z")
XYZ = ("x", "y", "z")


def godot(a, b, da, db):
    return star(a, b) + star(b, a).koszul(da, db) + vee(a, b)


def gdcb(a, b, da, db, sg):
    return diamond(a, b) - diamond(b, a).koszul(da - sg, db - sg) + bd(a, b)


def graded_identities(kind: str, sg: int):
    ids = []
    if kind == "gerstenhaber":
        ids += [
            identity("commutativity", ("x", "y"), dot(x, y), dot(y, x).koszul(dx, dy)),
            identity("associativity", XYZ, dot(dot(x, y), z), dot(x, dot(y, z))),
            identity("skew-symmetry", ("x", "y"), bracket(x, y), -bracket(y, x).koszul(dx - sg, dy - sg)),
            identity("jacobi", XYZ, bracket(bracket(x, y), z).koszul(dx - sg, dz - sg)
                     + bracket(bracket(y, z), x).koszul(dy - sg, dx - sg)
                     + bracket(bracket(z, x), y).koszul(dz - sg, dy - sg)),
            identity("leibniz", XYZ, bracket(x, dot(y, z)),
                     dot(bracket(x, y), z) + dot(y, bracket(x, z)).koszul(dx - sg, dy)),
        ]
        return tuple(ids)
    if kind in ("graded-ns-commutative", "ns-gerstenhaber"):
        ids += [
            identity("vee-symmetry", ("x", "y"), vee(x, y), vee(y, x).koszul(dx, dy)),
            identity("nscom-1", XYZ, star(x, star(y, z)), star(godot(x, y, dx, dy), z)),
            identity("nscom-2", XYZ, star(x, vee(y, z)) + vee(x, godot(y, z, dy, dz)),
                     (star(y, vee(x, z)) + vee(y, godot(x, z, dx, dz))).koszul(dx, dy)),
        ]
    if kind in ("graded-ns-lie", "ns-gerstenhaber"):
        a, b, c = dx - sg, dy - sg, dz - sg
        ids += [
            identity("blackdiamond-skew", ("x", "y"), bd(x, y), -bd(y, x).koszul(a, b)),
            identity("nslie-1", XYZ,
                     diamond(x, diamond(y, z)) - diamond(diamond(x, y), z)
                     - (diamond(y, diamond(x, z)) - diamond(diamond(y, x), z)).koszul(a, b),
                     diamond(bd(x, y), z)),
            identity("nslie-2", XYZ,
                     diamond(x, bd(y, z)) + bd(x, gdcb(y, z, dy, dz, sg))
                     + (diamond(y, bd(z, x)) + bd(y, gdcb(z, x, dz, dx, sg))).koszul(a, b + c)
                     + (diamond(z, bd(x, y)) + bd(z, gdcb(x, y, dx, dy, sg))).koszul(c, a + b)),
        ]
    if kind == "ns-gerstenhaber":
        ids += [
            identity("nsp-1", XYZ, star(gdcb(x, y, dx, dy, sg), z),
                     diamond(x, star(y, z)) - star(y, diamond(x, z)).koszul(dx - sg, dy)),
            identity("nsp-2", XYZ, diamond(godot(x, y, dx, dy), z),
                     star(x, diamond(y, z)) + star(y, diamond(x, z)).koszul(dx, dy)),
            identity("nsp-3", XYZ, bd(x, godot(y, z, dy, dz)) + diamond(x, vee(y, z)),
                     vee(gdcb(x, y, dx, dy, sg), z) + star(z, bd(x, y)).koszul(dz, dx + dy - sg)
                     + (vee(y, gdcb(x, z, dx, dz, sg)) + star(y, bd(x, z))).koszul(dx - sg, dy)),
        ]
    return tuple(ids)


def graded_context(G: GradedPresentation, maps=None, extra=None) -> Context:
    prods = {s: [P.tensor] for s, P in G.products.items()}
    for s, P in (extra or {}).items():
        prods[s] = [P.tensor]
    return Context(prods, {"A": G.space.dim}, dict(maps or {}), {"A": list(G.degrees)})


def verify_graded(G: GradedPresentation) -> VerificationReport:
    return check_identities(f"{G.kind} structure", graded_identities(G.kind, G.sigma),
                            graded_context(G), {"A": G.space})


def graded_flip(P: BilinearProduct, degrees, shift: int = 0) -> BilinearProduct:
    """(x, y) -> (-1)^((|x|+shift)(|y|+shift)) y P x."""
    d = np.array(degrees, dtype=np.int64) + shift
    sign = np.where((d[:, None] * d[None, :]) % 2 == 1, -1, 1).astype(object)
    t = P.tensor.transpose(1, 0, 2).mul_elementwise_int(sign[:, :, None])
    return BilinearProduct(P.right, P.left, P.codomain, t)


def _require(report, what):
    if not report.holds:
        raise PreconditionError(f"{what} check failed", report)


def graded_subadjacent(G: GradedPresentation, strict: bool = True) -> GradedPresentation:
    if G.kind != "ns-gerstenhaber":
        raise UnsupportedKind(f"{G.kind} has no graded subadjacent structure")
    if strict:
        _require(verify_graded(G), "ns-gerstenhaber")
    ctx, sg = graded_context(G), G.sigma
    prods = {"dot": product_from(ctx, G.space, godot(x, y, dx, dy)),
             "bracket": product_from(ctx, G.space, gdcb(x, y, dx, dy, sg))}
    return GradedPresentation("gerstenhaber", G.space, G.degrees, prods,
                              {"dot": 0, "bracket": -sg}, "graded subadjacent")


def _check_degree_zero(G: GradedPresentation, N: OperatorMatrix):
    if N.source != G.space:
        raise StructuralError("operator does not act on the graded space")
    d = np.array(G.degrees)
    bad = (N.matrix.num != 0) & (d[:, None] != d[None, :])
    if bad.any():
        i, j = (int(v) for v in np.argwhere(bad)[0])
        raise StructuralError(f"operator is not of degree 0: {G.space.names[j]} -> {G.space.names[i]}")


def verify_graded_nijenhuis(G: GradedPresentation, N: OperatorMatrix) -> VerificationReport:
    if G.kind != "gerstenhaber":
        raise UnsupportedKind("graded Nijenhuis operators are checked on Gerstenhaber structures")
    _check_degree_zero(G, N)
    ids = [nijenhuis_identity(s) for s in G.products]
    return check_identities("graded Nijenhuis operator", ids, graded_context(G, {"N": N.matrix}), {"A": G.space})


def graded_induce_from_nijenhuis(G: GradedPresentation, N: OperatorMatrix, strict: bool = True) -> GradedPresentation:
    _check_degree_zero(G, N)
    if strict:
        _require(verify_graded_nijenhuis(G, N), "graded Nijenhuis")
    n = lin("N")
    ctx = graded_context(G, {"N": N.matrix})
    formulas = {"star": dot(n(x), y), "vee": -n(dot(x, y)),
                "diamond": bracket(n(x), y), "blackdiamond": -n(bracket(x, y))}
    prods = {s: product_from(ctx, G.space, f) for s, f in formulas.items()}
    sh = G.shifts["bracket"]
    return GradedPresentation("ns-gerstenhaber", G.space, G.degrees, prods,
                              {"star": 0, "vee": 0, "diamond": sh, "blackdiamond": sh},
                              "induced by a graded Nijenhuis operator")


def graded_deform_by_nijenhuis(G: GradedPresentation, N: OperatorMatrix) -> GradedPresentation:
    _check_degree_zero(G, N)
    n = lin("N")
    ctx = graded_context(G, {"N": N.matrix})
    prods = {}
    for s in G.products:
        p = op(s)
        prods[s] = product_from(ctx, G.space, p(n(x), y) + p(x, n(y)) - n(p(x, y)))
    return GradedPresentation(G.kind, G.space, G.degrees, prods, G.shifts, "graded Nijenhuis deformation")


# ungraded data viewed with every degree 0 and shift 0
_UNGRADED = {"poisson": "gerstenhaber", "ns-commutative": "graded-ns-commutative",
             "ns-lie": "graded-ns-lie", "ns-poisson": "ns-gerstenhaber"}


def from_ungraded(A: AlgebraPresentation) -> GradedPresentation:
    if A.kind not in _UNGRADED:
        raise UnsupportedKind(f"{A.kind} has no graded counterpart")
    return GradedPresentation(_UNGRADED[A.kind], A.space, (0,) * A.space.dim, A.products,
                              {s: 0 for s in A.products}, f"{A.kind} in degree 0")


def exterior_algebra(g: AlgebraPresentation) -> GradedPresentation:
    """Lambda(g) with the wedge product and the Schouten bracket (shift -1)."""
    if g.kind != "lie":
        raise UnsupportedKind("the exterior algebra is built from a Lie algebra")
    n = g.space.dim
    subsets = [s for k in range(n + 1) for s in combinations(range(n), k)]
    index = {s: i for i, s in enumerate(subsets)}
    names = tuple("one" if not s else "_".join(g.space.names[i] for i in s) for s in subsets)
    lie = g["bracket"].constants()

    def wedge(a: dict, b: dict) -> dict:
        out = {}
        for s, c in a.items():
            for t, e in b.items():
                if set(s) & set(t):
                    continue
                merged = s + t
                # sign of the sorting permutation
                inv = sum(1 for i in range(len(merged)) for j in range(i + 1, len(merged)) if merged[i] > merged[j])
                key = tuple(sorted(merged))
                out[key] = out.get(key, 0) + (-1) ** inv * c * e
        return {k: v for k, v in out.items() if v}

    def add(*vs):
        out = {}
        for v, c in vs:
            for k, e in v.items():
                out[k] = out.get(k, 0) + c * e
        return {k: v for k, v in out.items() if v}

    memo = {}

    def br(s, t) -> dict:
        if not s or not t:
            return {}
        if (s, t) in memo:
            return memo[(s, t)]
        if len(s) == 1 and len(t) == 1:
            out = {(k,): lie[s[0], t[0], k] for k in range(n) if lie[s[0], t[0], k]}
        elif len(t) == 1:
            # skew symmetry; (|s|-1)(|t|-1) = 0
            out = add((br(t, s), -1))
        else:
            head, rest = t[:1], t[1:]
            sign = (-1) ** (len(s) - 1)
            out = add((wedge(br(s, head), {rest: 1}), 1), (wedge({head: 1}, br(s, rest)), sign))
        memo[(s, t)] = out
        return out

    wedge_t = np.zeros((len(subsets),) * 3, dtype=object)
    br_t = np.zeros((len(subsets),) * 3, dtype=object)
    for s in subsets:
        for t in subsets:
            for key, c in wedge({s: 1}, {t: 1}).items():
                wedge_t[index[s], index[t], index[key]] = c
            for key, c in br(s, t).items():
                br_t[index[s], index[t], index[key]] = c
    space = Space(names)
    prods = {"dot": BilinearProduct(space, space, space, QTensor.from_fractions(wedge_t)),
             "bracket": BilinearProduct(space, space, space, QTensor.from_fractions(br_t))}
    return GradedPresentation("gerstenhaber", space, tuple(len(s) for s in subsets), prods,
                              {"dot": 0, "bracket": -1}, "exterior algebra with Schouten bracket")
