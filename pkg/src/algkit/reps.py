"""Representations, Poisson 2-cocycles and twisted Rota-Baxter operators."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import hm_P
from .core import (BilinearProduct, ModuleMap, PreconditionError, Space, StructuralError, UnsupportedKind,
                   scale_product)
from .expr import Context, evaluate_side, identity, lin, op, variables
from .report import VerificationReport, check_identities
from .tensor import QTensor
from .structures import AlgebraPresentation, subadjacent, verify_structure

CE_NOTE = ("chevalley-eilenberg: cyclic form rho_x H(y,z) + rho_y H(z,x) + rho_z H(x,y)"
           " + H(x,{y,z}) + H(y,{z,x}) + H(z,{x,y}) = 0")
COMPAT_NOTE = "poisson-compat: grouped as ... + h(y,{x,z}) + mu_y H(x,z)"


@dataclass(frozen=True)
class RepresentationPresentation:
    """Actions mu_x(v) and rho_x(v) of A on V, each as a product A x V -> V."""

    algebra_space: Space
    module_space: Space
    mu: BilinearProduct
    rho: BilinearProduct

    def __post_init__(self):
        for name, P in (("mu", self.mu), ("rho", self.rho)):
            if (P.left, P.right, P.codomain) != (self.algebra_space, self.module_space, self.module_space):
                raise StructuralError(f"action {name} does not map A x V to V")


@dataclass(frozen=True)
class CocyclePair:
    h: BilinearProduct
    H: BilinearProduct

    def __post_init__(self):
        if (self.h.left, self.h.right, self.h.codomain) != (self.H.left, self.H.right, self.H.codomain):
            raise StructuralError("h and H must share domain and codomain")

    @property
    def module_space(self) -> Space:
        return self.h.codomain


x, y, z, v = variables("x", "y", "z", "v")
dot, bracket = op("dot"), op("bracket")
mu, rho, h, H = op("mu"), op("rho"), op("h"), op("H")
AAV = ("A", "A", "V")


def _R(a, b, c):
    return rho(a, mu(b, c)) - mu(b, rho(a, c)) - mu(bracket(a, b), c)


def _S(a, b, c):
    return mu(a, rho(b, c)) + mu(b, rho(a, c)) - rho(dot(a, b), c)


REP_BASE = (
    identity("mu-associativity", ("x", "y", "v"), mu(dot(x, y), v), mu(x, mu(y, v)), AAV, "V"),
    identity("mu-commutativity", ("x", "y", "v"), mu(x, mu(y, v)), mu(y, mu(x, v)), AAV, "V"),
    identity("rho-lie", ("x", "y", "v"), rho(bracket(x, y), v), rho(x, rho(y, v)) - rho(y, rho(x, v)), AAV, "V"),
)
REP_IDENTITIES = {
    "poisson": REP_BASE + (
        identity("rep-poisson-1", ("x", "y", "v"), _R(x, y, v), 0, AAV, "V"),
        identity("rep-poisson-2", ("x", "y", "v"), _S(x, y, v), 0, AAV, "V"),
    ),
    "f-manifold": REP_BASE + (
        identity("fman-rep-1", ("x", "y", "z", "v"), _R(dot(x, y), z, v),
                 mu(x, _R(y, z, v)) + mu(y, _R(x, z, v)), ("A",) * 3 + ("V",), "V"),
        identity("fman-rep-2", ("x", "y", "z", "v"), mu(hm_P(x, y, z), v),
                 _S(y, z, mu(x, v)) - mu(x, _S(y, z, v)), ("A",) * 3 + ("V",), "V"),
    ),
}

AAA = ("A", "A", "A")
COCYCLE_IDENTITIES = (
    identity("h-symmetry", ("x", "y"), h(x, y), h(y, x), ("A", "A"), "V"),
    identity("harrison", ("x", "y", "z"), mu(x, h(y, z)) + h(x, dot(y, z)), mu(y, h(x, z)) + h(y, dot(x, z)), AAA, "V"),
    identity("H-skew", ("x", "y"), H(x, y), -H(y, x), ("A", "A"), "V"),
    identity("chevalley-eilenberg", ("x", "y", "z"),
             rho(x, H(y, z)) + rho(y, H(z, x)) + rho(z, H(x, y))
             + H(x, bracket(y, z)) + H(y, bracket(z, x)) + H(z, bracket(x, y)), 0, AAA, "V"),
    identity("poisson-compat", ("x", "y", "z"), H(x, dot(y, z)) + rho(x, h(y, z)),
             h(bracket(x, y), z) + mu(z, H(x, y)) + h(y, bracket(x, z)) + mu(y, H(x, z)), AAA, "V"),
)

_Rm = lin("R")
u, w = variables("u", "w")
TWISTED_IDENTITIES = (
    identity("twisted-rb-1", ("u", "w"), dot(_Rm(u), _Rm(w)),
             _Rm(mu(_Rm(u), w) + mu(_Rm(w), u) + h(_Rm(u), _Rm(w))), ("V", "V"), "A"),
    identity("twisted-rb-2", ("u", "w"), bracket(_Rm(u), _Rm(w)),
             _Rm(rho(_Rm(u), w) - rho(_Rm(w), u) + H(_Rm(u), _Rm(w))), ("V", "V"), "A"),
)


def _context(A, V, c=None, R=None) -> Context:
    prods = {s: [P.tensor] for s, P in A.products.items()}
    prods["mu"], prods["rho"] = [V.mu.tensor], [V.rho.tensor]
    if c is not None:
        prods["h"], prods["H"] = [c.h.tensor], [c.H.tensor]
    maps = {"R": R.matrix} if R is not None else {}
    return Context(prods, {"A": A.space.dim, "V": V.module_space.dim}, maps)


def _spaces(A, V):
    return {"A": A.space, "V": V.module_space}


def _check_pair(A, V):
    if A.kind not in REP_IDENTITIES:
        raise UnsupportedKind(f"representations of {A.kind} structures are not supported")
    if V.algebra_space != A.space:
        raise StructuralError("representation is over a different algebra space")


def verify_representation(A: AlgebraPresentation, V: RepresentationPresentation) -> VerificationReport:
    _check_pair(A, V)
    return check_identities(f"{A.kind} representation", REP_IDENTITIES[A.kind], _context(A, V), _spaces(A, V))


def adjoint_representation(A: AlgebraPresentation) -> RepresentationPresentation:
    return RepresentationPresentation(A.space, A.space, A["dot"], A["bracket"])


def induced_representation(A: AlgebraPresentation) -> tuple[AlgebraPresentation, RepresentationPresentation]:
    """The subadjacent algebra acting on A by mu_x = x * -, rho_x = x <> -."""
    if A.kind not in ("ns-poisson", "ns-f-manifold"):
        raise UnsupportedKind(f"no induced representation for {A.kind}")
    return subadjacent(A), RepresentationPresentation(A.space, A.space, A["star"], A["diamond"])


def _require(report, what):
    if not report.holds:
        raise PreconditionError(f"{what} check failed", report)


def _check_cocycle(A, V, c):
    if A.kind != "poisson":
        raise UnsupportedKind("2-cocycles are checked for Poisson structures only")
    if (c.h.left, c.h.right, c.h.codomain) != (A.space, A.space, V.module_space):
        raise StructuralError("cocycle pair must map A x A to the module space")


def verify_poisson_2cocycle(A: AlgebraPresentation, V: RepresentationPresentation, c: CocyclePair) -> VerificationReport:
    _check_pair(A, V)
    _check_cocycle(A, V, c)
    _require(verify_representation(A, V), "representation")
    return check_identities("Poisson 2-cocycle", COCYCLE_IDENTITIES, _context(A, V, c), _spaces(A, V),
                            notes=(CE_NOTE, COMPAT_NOTE))


def _check_map(A, V, R):
    if R.source != V.module_space or R.target != A.space:
        raise StructuralError("twisted Rota-Baxter map must go from the module space to the algebra")


def verify_twisted_rb(A: AlgebraPresentation, V: RepresentationPresentation, c: CocyclePair,
                      R: ModuleMap) -> VerificationReport:
    _check_map(A, V, R)
    _require(verify_poisson_2cocycle(A, V, c), "2-cocycle")
    return check_identities("twisted Rota-Baxter operator", TWISTED_IDENTITIES, _context(A, V, c, R),
                            _spaces(A, V), notes=(CE_NOTE, COMPAT_NOTE))


def induce_from_twisted_rb(A: AlgebraPresentation, V: RepresentationPresentation, c: CocyclePair,
                           R: ModuleMap, strict: bool = True) -> AlgebraPresentation:
    _check_pair(A, V)
    _check_cocycle(A, V, c)
    _check_map(A, V, R)
    if strict:
        _require(verify_twisted_rb(A, V, c, R), "twisted Rota-Baxter")
    ctx = _context(A, V, c, R)
    Vs = V.module_space
    formulas = {"star": mu(_Rm(u), w), "vee": h(_Rm(u), _Rm(w)),
                "diamond": rho(_Rm(u), w), "blackdiamond": H(_Rm(u), _Rm(w))}
    prods = {}
    for slot, f in formulas.items():
        ident = identity(slot, ("u", "w"), f, 0, ("V", "V"), "V")
        prods[slot] = BilinearProduct(Vs, Vs, Vs, evaluate_side(ctx, ident, ident.lhs)[0])
    return AlgebraPresentation("ns-poisson", Vs, prods, "induced by a twisted Rota-Baxter operator")


def canonical_twisted_factorization(A: AlgebraPresentation, strict: bool = True):
    """(subadjacent, induced representation, (vee, blackdiamond), Id) for an NS-Poisson A."""
    if A.kind != "ns-poisson":
        raise UnsupportedKind(f"factorization needs an ns-poisson structure, got {A.kind}")
    if strict:
        _require(verify_structure(A), "ns-poisson structure")
    base, V = induced_representation(A)
    c = CocyclePair(A["vee"], A["blackdiamond"])
    return base, V, c, ModuleMap(A.space, A.space, QTensor.identity(A.space.dim))


def reynolds_cocycle(A: AlgebraPresentation) -> CocyclePair:
    """-(dot, bracket): the twist that makes a Reynolds operator twisted Rota-Baxter."""
    return CocyclePair(scale_product(-1, A["dot"]), scale_product(-1, A["bracket"]))


__all__ = ["RepresentationPresentation", "CocyclePair", "verify_representation", "induced_representation",
           "adjoint_representation", "verify_poisson_2cocycle", "verify_twisted_rb", "induce_from_twisted_rb",
           "canonical_twisted_factorization", "reynolds_cocycle"]
