"""Truncated formal deformations, semi-classical limits, and NS-Lie filtrations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from . import linalg
from .catalog import KINDS
from .core import (BilinearProduct, PreconditionError, Space, StructuralError, UnsupportedKind, Vector, combine,
                   eval_product, flip)
from .expr import Context
from .report import Counterexample, IdentityResult, VerificationReport, check_identities
from .structures import AlgebraPresentation, linear_recipe

DEFORMATION_KINDS = ("associative", "ns-associative", "ns-pre-lie", "l-dendriform", "pre-lie")


@dataclass(frozen=True)
class TruncatedDeformation:
    """Products p_t = sum_{i<=m} p_i t^i, kept mod t^(m+1)."""

    kind: str
    space: Space
    order: int
    coefficients: Mapping[str, Sequence[BilinearProduct]]
    metadata: str = ""

    def __post_init__(self):
        if self.kind not in DEFORMATION_KINDS:
            raise UnsupportedKind(f"deformations of {self.kind} structures are not supported")
        if self.order < 1:
            raise StructuralError("deformation order must be positive")
        if set(self.coefficients) != set(KINDS[self.kind].slots):
            raise StructuralError(f"{self.kind} needs products {sorted(KINDS[self.kind].slots)}")
        coeffs = {}
        for slot, series in sorted(self.coefficients.items()):
            series = list(series)
            if len(series) > self.order + 1:
                raise StructuralError(f"slot {slot!r} has terms beyond t^{self.order}")
            series += [BilinearProduct.zero(self.space)] * (self.order + 1 - len(series))
            for P in series:
                if (P.left, P.right, P.codomain) != (self.space,) * 3:
                    raise StructuralError(f"coefficient of {slot!r} is not on the deformation's space")
            coeffs[slot] = tuple(series)
        object.__setattr__(self, "coefficients", coeffs)

    def coefficient(self, slot: str, power: int) -> BilinearProduct:
        return self.coefficients[slot][power]

    def base(self) -> AlgebraPresentation:
        return AlgebraPresentation(self.kind, self.space, {s: c[0] for s, c in self.coefficients.items()},
                                   "t^0 coefficient")


def constant_deformation(A: AlgebraPresentation, order: int) -> TruncatedDeformation:
    return TruncatedDeformation(A.kind, A.space, order, {s: [P] for s, P in A.products.items()})


def deformation_context(D: TruncatedDeformation) -> Context:
    series = {s: [P.tensor for P in c] for s, c in D.coefficients.items()}
    for name, recipe in KINDS[D.kind].derived.items():
        series[name] = [linear_recipe({s: c[p] for s, c in D.coefficients.items()}, recipe, D.space).tensor
                        for p in range(D.order + 1)]
    return Context(series, {"A": D.space.dim}, order=D.order)


def verify_deformation(D: TruncatedDeformation) -> VerificationReport:
    return check_identities(f"{D.kind} deformation mod t^{D.order + 1}", KINDS[D.kind].identities,
                            deformation_context(D), {"A": D.space}, deformation=True)


def _skew_part(P: BilinearProduct, Q: BilinearProduct) -> BilinearProduct:
    """(x, y) -> P(x, y) - Q(y, x)."""
    return combine([(1, P), (-1, flip(Q))])


def _fail(msg, report=None):
    if report is None:
        report = VerificationReport(msg, [IdentityResult("precondition", False)])
    raise PreconditionError(msg, report)


def _base_symmetry(D: TruncatedDeformation):
    c0 = {s: c[0] for s, c in D.coefficients.items()}
    pairs = {"associative": [("dot", "dot")], "ns-associative": [("succ", "prec"), ("vee", "vee")],
             "ns-pre-lie": [("rtri", "ltri"), ("circ", "circ")], "l-dendriform": [("rtri", "ltri")],
             "pre-lie": [("diamond", "diamond")]}[D.kind]
    for a, b in pairs:
        if c0[a] != flip(c0[b]):
            _fail(f"base is not commutative: x {a}_0 y != y {b}_0 x")


def semiclassical_limit(D: TruncatedDeformation) -> AlgebraPresentation:
    if D.order < 2:
        _fail("the limit needs the deformation verified through t^2 (order >= 2)")
    report = verify_deformation(D)
    if not report.holds:
        _fail("deformation check failed", report)
    _base_symmetry(D)
    c = D.coefficient
    S = D.space
    meta = f"semi-classical limit of a {D.kind} deformation"
    if D.kind == "associative":
        return AlgebraPresentation("poisson", S, {"dot": c("dot", 0), "bracket": _skew_part(c("dot", 1), c("dot", 1))},
                                   meta)
    if D.kind == "pre-lie":
        return AlgebraPresentation("f-manifold", S, {"dot": c("diamond", 0),
                                                     "bracket": _skew_part(c("diamond", 1), c("diamond", 1))}, meta)
    if D.kind == "ns-associative":
        succ, prec, vee = "succ", "prec", "vee"
        kind = "ns-poisson"
    else:
        succ, prec, vee = "rtri", "ltri", "circ"
        kind = "ns-f-manifold"
    if D.kind == "l-dendriform":
        zero = BilinearProduct.zero(S)
        prods = {"star": c(succ, 0), "vee": zero, "diamond": _skew_part(c(succ, 1), c(prec, 1)),
                 "blackdiamond": zero}
    else:
        prods = {"star": c(succ, 0), "vee": c(vee, 0), "diamond": _skew_part(c(succ, 1), c(prec, 1)),
                 "blackdiamond": _skew_part(c(vee, 1), c(vee, 1))}
    return AlgebraPresentation(kind, S, prods, meta)


# ---------------------------------------------------------------------------
# filtrations

class Filtration:
    """A_0 <= A_1 <= ... <= A_L = A, each level kept as an echelon basis."""

    def __init__(self, space: Space, levels: Sequence[Sequence[Vector]]):
        self.space = space
        n = space.dim
        self.levels = []
        prev = []
        if not levels:
            raise StructuralError("a filtration needs at least one level")
        for k, vecs in enumerate(levels):
            rows = []
            for v in vecs:
                if v.space != space:
                    raise StructuralError("filtration vector from another space")
                rows.append(list(v.coords))
            basis, _ = linalg.echelon(rows, n)
            if not linalg.contains(basis, prev, n):
                raise StructuralError(f"filtration level {k} does not contain level {k - 1}")
            self.levels.append(basis)
            prev = basis
        if len(self.levels[-1]) != n:
            raise StructuralError("the top filtration level must be the whole space")

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def level(self, k: int) -> list[list[Fraction]]:
        return self.levels[min(k, self.top)]

    def level_vectors(self, k: int) -> list[Vector]:
        return [Vector(self.space, r) for r in self.level(k)]


VEE_RULES = ("printed", "commutator")


def _containment(pairs, lift, F: Filtration, value, target):
    """First (n, m, i, j, ...) with value(x, y) outside A_target(n, m), x in A_(n+lift), y in A_(m+lift)."""
    n_dim = F.space.dim
    for n, m in pairs:
        tgt = F.level(target(n, m))
        if len(tgt) == n_dim:
            continue
        for i, x in enumerate(F.level_vectors(n + lift)):
            for j, y in enumerate(F.level_vectors(m + lift)):
                w = value(x, y)
                if not linalg.in_span(tgt, w.coords, n_dim):
                    return n, m, i, j, x, y, w, target(n, m)
    return None


def verify_ns_lie_filtration(A: AlgebraPresentation, F: Filtration, vee_rule: str = "printed") -> VerificationReport:
    if A.kind != "ns-associative":
        raise UnsupportedKind("NS-Lie filtrations are defined for ns-associative structures")
    if F.space != A.space:
        raise StructuralError("filtration is on another space")
    if vee_rule not in VEE_RULES:
        raise StructuralError(f"unknown vee rule {vee_rule!r}")
    L = F.top
    grid = [(n, m) for n in range(L + 1) for m in range(L + 1)]
    shifted = [(n, m) for n in range(L) for m in range(L)]

    def prod(slot):
        return lambda x, y: eval_product(A[slot], x, y)

    def skew(a, b):
        return lambda x, y: eval_product(A[a], x, y) - eval_product(A[b], y, x)

    checks = [
        ("filtered[succ]", grid, 0, prod("succ"), lambda n, m: n + m),
        ("filtered[prec]", grid, 0, prod("prec"), lambda n, m: n + m),
        ("filtered[vee]", grid, 0, prod("vee"), lambda n, m: n + m),
        ("lie[succ-prec]", shifted, 1, skew("succ", "prec"), lambda n, m: n + m + 1),
        ("lie[vee]", shifted, 1, prod("vee") if vee_rule == "printed" else skew("vee", "vee"), lambda n, m: n + m + 1),
    ]
    report = VerificationReport(f"NS-Lie filtration ({vee_rule} vee rule)")
    for name, pairs, lift, value, target in checks:
        hit = _containment(pairs, lift, F, value, target)
        if hit is None:
            report.results.append(IdentityResult(name, True))
            continue
        n, m, i, j, x, y, w, k = hit
        lx, ly = n + lift, m + lift
        note = f"x = {x}, y = {y}, value {w} not in A_{k}"
        ce = Counterexample((n, m, i, j), (f"A_{lx}[{i}]", f"A_{ly}[{j}]"), None, None, None, note)
        report.results.append(IdentityResult(name, False, ce))
    return report


def _project(F: Filtration, comps, k: int, w: Vector) -> list[Fraction] | None:
    """Coordinates of w + A_k in the chosen basis of A_(k+1)/A_k (None: component absent)."""
    if k >= F.top:
        return None
    n = F.space.dim
    basis = comps[k] + F.level(k)
    c = linalg.coordinates(basis, w.coords, n)
    if c is None:
        raise StructuralError(f"value {w} does not lie in A_{k + 1}")
    return c[:len(comps[k])]


def gr_basis(F: Filtration):
    """Per component n, rows completing A_n to A_(n+1); plus Gr basis names."""
    n = F.space.dim
    comps = [linalg.complement(F.level(k), F.level(k + 1), n) for k in range(F.top)]
    names, where = [], []
    for k, rows in enumerate(comps):
        for r in rows:
            pivot = next(j for j, c in enumerate(r) if c)
            names.append(f"gr{k}_{F.space.names[pivot]}")
            where.append(k)
    return comps, names, where


def gr_products(A: AlgebraPresentation, F: Filtration, offsets: Mapping[int, Vector] | None = None):
    """The four Gr products, using representative + offsets[i] for Gr basis element i."""
    comps, names, where = gr_basis(F)
    space = Space(tuple(names))
    reps = []
    for k, rows in enumerate(comps):
        for r in rows:
            reps.append(Vector(F.space, r))
    for i, off in (offsets or {}).items():
        if not linalg.in_span(F.level(where[i]), off.coords, F.space.dim):
            raise StructuralError(f"offset for {names[i]} is not in A_{where[i]}")
        reps[i] = reps[i] + off
    start = np.cumsum([0] + [len(r) for r in comps])
    d = len(names)
    tables = {s: np.full((d, d, d), Fraction(0), dtype=object) for s in ("star", "vee", "diamond", "blackdiamond")}
    for a in range(d):
        for b in range(d):
            n, m = where[a], where[b]
            x, y = reps[a], reps[b]
            values = {
                "star": (eval_product(A["succ"], x, y), n + m + 1),
                "vee": (eval_product(A["vee"], x, y), n + m + 1),
                "diamond": (eval_product(A["succ"], x, y) - eval_product(A["prec"], y, x), n + m),
                "blackdiamond": (eval_product(A["vee"], x, y) - eval_product(A["vee"], y, x), n + m),
            }
            for s, (w, k) in values.items():
                c = _project(F, comps, k, w)
                if c is None:
                    continue
                for t, val in enumerate(c):
                    tables[s][a, b, start[k] + t] = val
    prods = {s: BilinearProduct.on(space, t) for s, t in tables.items()}
    return space, prods, where


def graded_from_filtration(A: AlgebraPresentation, F: Filtration, vee_rule: str = "printed") -> AlgebraPresentation:
    report = verify_ns_lie_filtration(A, F, vee_rule)
    if not report.holds:
        raise PreconditionError("filtration check failed", report)
    space, prods, where = gr_products(A, F)
    # recompute with every representative moved inside its coset
    offsets = {}
    for i, k in enumerate(where):
        lower = F.level_vectors(k)
        if lower:
            off = lower[0]
            for v in lower[1:]:
                off = off + v
            offsets[i] = off
    _, moved, _ = gr_products(A, F, offsets)
    for s in prods:
        if prods[s] != moved[s]:
            raise StructuralError(f"Gr product {s} depends on coset representatives")
    grading = ", ".join(f"{n}:{k}" for n, k in zip(space.names, where))
    return AlgebraPresentation("ns-poisson", space, prods,
                               f"associated graded of an NS-Lie filtration; component of A_(n+1)/A_n is n; {grading}")


__all__ = ["TruncatedDeformation", "constant_deformation", "verify_deformation", "semiclassical_limit",
           "Filtration", "verify_ns_lie_filtration", "graded_from_filtration", "gr_products", "gr_basis"]
