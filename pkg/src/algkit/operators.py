"""Nijenhuis, Reynolds and derivation operators and what they induce."""

from __future__ import annotations

from itertools import combinations

from .catalog import derivation_identity, nijenhuis_identity, reynolds_identity
from .core import OperatorMatrix, PreconditionError, StructuralError, UnsupportedKind
from .expr import identity, lin, op, variables
from .report import VerificationReport, check_identities
from .structures import (AlgebraPresentation, context_for, product_from, subadjacent, add_structures,
                         verify_structure)

OPERATOR_KINDS = ("associative", "commutative-associative", "lie", "poisson", "f-manifold")

# base kind -> NS kind produced by a Nijenhuis or Reynolds operator
NS_COUNTERPART = {
    "associative": "ns-associative",
    "commutative-associative": "ns-commutative",
    "lie": "ns-lie",
    "poisson": "ns-poisson",
    "f-manifold": "ns-f-manifold",
}

x, y = variables("x", "y")
dot, bracket = op("dot"), op("bracket")


def _check_operator(A: AlgebraPresentation, T: OperatorMatrix, kinds=OPERATOR_KINDS):
    if A.kind not in kinds:
        raise UnsupportedKind(f"operators on {A.kind} structures are not supported")
    if T.source != A.space or T.target != A.space:
        raise StructuralError("operator does not act on the algebra's space")


def verify_nijenhuis(A: AlgebraPresentation, N: OperatorMatrix) -> VerificationReport:
    _check_operator(A, N)
    ids = [nijenhuis_identity(s) for s in A.products]
    return check_identities("Nijenhuis operator", ids, context_for(A, {"N": N.matrix}), {"A": A.space})


def verify_reynolds(A: AlgebraPresentation, R: OperatorMatrix) -> VerificationReport:
    _check_operator(A, R)
    ids = [reynolds_identity(s) for s in A.products]
    return check_identities("Reynolds operator", ids, context_for(A, {"R": R.matrix}), {"A": A.space})


def verify_derivation(A: AlgebraPresentation, D: OperatorMatrix) -> VerificationReport:
    _check_operator(A, D, ("commutative-associative",))
    return check_identities("derivation", [derivation_identity()], context_for(A, {"D": D.matrix}),
                            {"A": A.space})


def _require(report: VerificationReport, what: str):
    if not report.holds:
        raise PreconditionError(f"{what} check failed", report)


def _induced(A, maps, formulas, metadata):
    ctx = context_for(A, maps)
    prods = {slot: product_from(ctx, A.space, f) for slot, f in formulas.items()}
    return AlgebraPresentation(NS_COUNTERPART[A.kind], A.space, prods, metadata)


def induce_from_nijenhuis(A: AlgebraPresentation, N: OperatorMatrix, strict: bool = True) -> AlgebraPresentation:
    _check_operator(A, N)
    if strict:
        _require(verify_nijenhuis(A, N), "Nijenhuis")
    n = lin("N")
    formulas = {}
    if "dot" in A.products:
        formulas["vee"] = -n(dot(x, y))
        if A.kind == "associative":
            formulas["succ"] = dot(n(x), y)
            formulas["prec"] = dot(x, n(y))
        else:
            formulas["star"] = dot(n(x), y)
    if "bracket" in A.products:
        formulas["diamond"] = bracket(n(x), y)
        formulas["blackdiamond"] = -n(bracket(x, y))
    return _induced(A, {"N": N.matrix}, formulas, f"induced by a Nijenhuis operator on a {A.kind} structure")


def induce_from_reynolds(A: AlgebraPresentation, R: OperatorMatrix, strict: bool = True) -> AlgebraPresentation:
    _check_operator(A, R, ("commutative-associative", "lie", "poisson", "f-manifold"))
    if strict:
        _require(verify_reynolds(A, R), "Reynolds")
    r = lin("R")
    formulas = {}
    if "dot" in A.products:
        formulas["star"] = dot(r(x), y)
        formulas["vee"] = -dot(r(x), r(y))
    if "bracket" in A.products:
        formulas["diamond"] = bracket(r(x), y)
        formulas["blackdiamond"] = -bracket(r(x), r(y))
    return _induced(A, {"R": R.matrix}, formulas, f"induced by a Reynolds operator on a {A.kind} structure")


def intertwining_report(A: AlgebraPresentation, N: OperatorMatrix) -> VerificationReport:
    """N(x *_N y) = N(x) * N(y) for every product slot *."""
    deformed = _deformed_products(A, N)
    n = lin("N")
    ids = [identity(f"intertwining[{s}]", ("x", "y"), n(op(f"{s}_N")(x, y)), op(s)(n(x), n(y)))
           for s in A.products]
    extra = {f"{s}_N": P for s, P in deformed.items()}
    return check_identities("intertwining", ids, context_for(A, {"N": N.matrix}, extra), {"A": A.space})


def _deformed_products(A, N):
    n = lin("N")
    ctx = context_for(A, {"N": N.matrix})
    out = {}
    for s in A.products:
        p = op(s)
        out[s] = product_from(ctx, A.space, p(n(x), y) + p(x, n(y)) - n(p(x, y)))
    return out


def deform_by_nijenhuis(A: AlgebraPresentation, N: OperatorMatrix) -> AlgebraPresentation:
    _check_operator(A, N)
    D = AlgebraPresentation(A.kind, A.space, _deformed_products(A, N), f"Nijenhuis deformation of {A.kind}")
    if verify_nijenhuis(A, N).holds:
        tw = intertwining_report(A, N)
        if not tw.holds:  # excluded by the theory; would mean an engine fault
            raise AssertionError(tw.summary())
    return D


def nijenhuis_hierarchy(A: AlgebraPresentation, N: OperatorMatrix, powers, strict: bool = True) -> VerificationReport:
    _check_operator(A, N)
    if strict:
        _require(verify_nijenhuis(A, N), "Nijenhuis")
    powers = sorted(set(int(k) for k in powers))
    report = VerificationReport(f"Nijenhuis hierarchy, powers {powers}")
    induced = {}
    for k in powers:
        Nk = N.power(k)
        report.extend(verify_nijenhuis(A, Nk), f"N^{k}: ")
        induced[k] = induce_from_nijenhuis(A, Nk, strict=False)
        report.extend(verify_structure(induced[k]), f"N^{k} induced: ")
    for k, l in combinations(powers, 2):
        report.extend(verify_structure(add_structures(induced[k], induced[l])), f"N^{k}+N^{l}: ")
    return report


def derivation_bracket(A: AlgebraPresentation, D: OperatorMatrix, strict: bool = True) -> AlgebraPresentation:
    _check_operator(A, D, ("commutative-associative",))
    if strict:
        _require(verify_derivation(A, D), "derivation")
    d = lin("D")
    ctx = context_for(A, {"D": D.matrix})
    br = product_from(ctx, A.space, dot(x, d(y)) - dot(y, d(x)))
    return AlgebraPresentation("f-manifold", A.space, {"dot": A["dot"], "bracket": br},
                               "bracket x.D(y) - y.D(x) from a derivation")


def subadjacent_of_induced(A: AlgebraPresentation, N: OperatorMatrix) -> AlgebraPresentation:
    return subadjacent(induce_from_nijenhuis(A, N, strict=False))
