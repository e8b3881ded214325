"""The identity catalog: every structure kind as data.

Each kind lists its product slots, the derived products its identities
use (linear combinations of slots and their flips), and the identities
themselves.  Verifiers iterate this table; nothing dispatches on kind
names in code.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .expr import Expr, identity, lin, op, variables

x, y, z, w = variables("x", "y", "z", "w")

dot, bracket = op("dot"), op("bracket")
star, vee, diamond, bdiamond = op("star"), op("vee"), op("diamond"), op("blackdiamond")
prec, succ = op("prec"), op("succ")
rtri, ltri, circ = op("rtri"), op("ltri"), op("circ")
odot, dcb = op("odot"), op("dcb")

XYZ = ("x", "y", "z")
XYZW = ("x", "y", "z", "w")


@dataclass(frozen=True)
class Kind:
    tag: str
    slots: tuple[str, ...]
    identities: tuple = ()
    # derived slot -> ((coefficient, slot, flipped), ...)
    derived: dict = field(default_factory=dict)


ODOT_COM = ((1, "star", False), (1, "star", True), (1, "vee", False))
DCB = ((1, "diamond", False), (-1, "diamond", True), (1, "blackdiamond", False))
ODOT_NSA = ((1, "prec", False), (1, "succ", False), (1, "vee", False))
ODOT_NPL = ((1, "rtri", False), (1, "ltri", False), (1, "circ", False))
ODOT_LD = ((1, "rtri", False), (1, "ltri", False))


def hm_P(a, b, c) -> Expr:
    return bracket(a, dot(b, c)) - dot(bracket(a, b), c) - dot(b, bracket(a, c))


def F1(a, b, c) -> Expr:
    return diamond(a, star(b, c)) - star(b, diamond(a, c)) - star(dcb(a, b), c)


def F2(a, b, c) -> Expr:
    return star(a, diamond(b, c)) + star(b, diamond(a, c)) - diamond(odot(a, b), c)


def F3(a, b, c) -> Expr:
    return (bdiamond(a, odot(b, c)) + diamond(a, vee(b, c)) - star(c, bdiamond(a, b))
            - star(b, bdiamond(a, c)) - vee(b, dcb(a, c)) - vee(dcb(a, b), c))


def P_from_defects(a, b, c) -> Expr:
    return F1(a, b, c) + F1(a, c, b) + F2(b, c, a) + F3(a, b, c)


COMMUTATIVITY = identity("commutativity", ("x", "y"), dot(x, y), dot(y, x))
ASSOCIATIVITY = identity("associativity", XYZ, dot(dot(x, y), z), dot(x, dot(y, z)))
SKEW = identity("skew-symmetry", ("x", "y"), bracket(x, y), -bracket(y, x))
JACOBI = identity("jacobi", XYZ, bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)))
LEIBNIZ = identity("leibniz", XYZ, bracket(x, dot(y, z)), dot(bracket(x, y), z) + dot(y, bracket(x, z)))
HERTLING_MANIN = identity("hertling-manin", XYZW, hm_P(dot(x, y), z, w), dot(x, hm_P(y, z, w)) + dot(y, hm_P(x, z, w)))

ZINBIEL = identity("zinbiel", XYZ, star(x, star(y, z)), star(star(x, y) + star(y, x), z))
PRE_LIE = identity("pre-lie", XYZ, diamond(x, diamond(y, z)) - diamond(diamond(x, y), z),
                   diamond(y, diamond(x, z)) - diamond(diamond(y, x), z))
PRE_POISSON_1 = identity("pre-poisson-1", XYZ, star(diamond(x, y) - diamond(y, x), z),
                         diamond(x, star(y, z)) - star(y, diamond(x, z)))
PRE_POISSON_2 = identity("pre-poisson-2", XYZ, diamond(star(x, y) + star(y, x), z),
                         star(x, diamond(y, z)) + star(y, diamond(x, z)))

NSALG = (
    identity("nsalg-1", XYZ, prec(prec(x, y), z), prec(x, odot(y, z))),
    identity("nsalg-2", XYZ, prec(succ(x, y), z), succ(x, prec(y, z))),
    identity("nsalg-3", XYZ, succ(odot(x, y), z), succ(x, succ(y, z))),
    identity("nsalg-4", XYZ, prec(vee(x, y), z) + vee(odot(x, y), z), succ(x, vee(y, z)) + vee(x, odot(y, z))),
)

NSCOM = (
    identity("vee-symmetry", ("x", "y"), vee(x, y), vee(y, x)),
    identity("nscom-1", XYZ, star(x, star(y, z)), star(odot(x, y), z)),
    identity("nscom-2", XYZ, star(x, vee(y, z)) + vee(x, odot(y, z)), star(y, vee(x, z)) + vee(y, odot(x, z))),
)

NSLIE = (
    identity("blackdiamond-skew", ("x", "y"), bdiamond(x, y), -bdiamond(y, x)),
    identity("nslie-1", XYZ,
             diamond(x, diamond(y, z)) - diamond(diamond(x, y), z) - diamond(y, diamond(x, z)) + diamond(diamond(y, x), z),
             diamond(bdiamond(x, y), z)),
    identity("nslie-2", XYZ,
             bdiamond(x, dcb(y, z)) + bdiamond(y, dcb(z, x)) + bdiamond(z, dcb(x, y))
             + diamond(x, bdiamond(y, z)) + diamond(y, bdiamond(z, x)) + diamond(z, bdiamond(x, y))),
)

NSP = (
    identity("nsp-1", XYZ, star(dcb(x, y), z), diamond(x, star(y, z)) - star(y, diamond(x, z))),
    identity("nsp-2", XYZ, diamond(odot(x, y), z), star(x, diamond(y, z)) + star(y, diamond(x, z))),
    identity("nsp-3", XYZ, bdiamond(x, odot(y, z)) + diamond(x, vee(y, z)),
             vee(dcb(x, y), z) + star(z, bdiamond(x, y)) + vee(y, dcb(x, z)) + star(y, bdiamond(x, z))),
)

NSF = (
    identity("nsf-1", XYZW, F1(odot(x, y), z, w), star(x, F1(y, z, w)) + star(y, F1(x, z, w))),
    identity("nsf-2", XYZW, star(P_from_defects(x, y, z), w), F2(y, z, star(x, w)) - star(x, F2(y, z, w))),
    identity("nsf-3", XYZW, F3(odot(x, y), z, w) + F2(z, w, vee(y, x)),
             star(x, F3(y, z, w)) + star(y, F3(x, z, w))
             + vee(x, P_from_defects(y, z, w)) + vee(y, P_from_defects(x, z, w))),
)


def _nspl(with_circ: bool):
    ids = [
        identity("nspl-1", XYZ, rtri(odot(x, y), z) - rtri(x, rtri(y, z)), rtri(odot(y, x), z) - rtri(y, rtri(x, z))),
        identity("nspl-2", XYZ, rtri(x, ltri(y, z)) - ltri(rtri(x, y), z), ltri(y, odot(x, z)) - ltri(ltri(y, x), z)),
    ]
    if with_circ:
        def side(a, b):
            return circ(odot(a, b), z) - circ(a, odot(b, z)) + ltri(circ(a, b), z) - rtri(a, circ(b, z))
        ids.append(identity("nspl-3", XYZ, side(x, y), side(y, x)))
    return tuple(ids)


COMMUTATIVE_ASSOCIATIVE = (COMMUTATIVITY, ASSOCIATIVITY)
LIE = (SKEW, JACOBI)

KINDS: dict[str, Kind] = {k.tag: k for k in (
    Kind("associative", ("dot",), (ASSOCIATIVITY,)),
    Kind("commutative-associative", ("dot",), COMMUTATIVE_ASSOCIATIVE),
    Kind("lie", ("bracket",), LIE),
    Kind("poisson", ("dot", "bracket"), COMMUTATIVE_ASSOCIATIVE + LIE + (LEIBNIZ,)),
    Kind("f-manifold", ("dot", "bracket"), COMMUTATIVE_ASSOCIATIVE + LIE + (HERTLING_MANIN,)),
    Kind("zinbiel", ("star",), (ZINBIEL,)),
    Kind("pre-lie", ("diamond",), (PRE_LIE,)),
    Kind("pre-poisson", ("star", "diamond"), (ZINBIEL, PRE_LIE, PRE_POISSON_1, PRE_POISSON_2)),
    Kind("ns-associative", ("prec", "succ", "vee"), NSALG, {"odot": ODOT_NSA}),
    Kind("ns-commutative", ("star", "vee"), NSCOM, {"odot": ODOT_COM}),
    Kind("ns-lie", ("diamond", "blackdiamond"), NSLIE, {"dcb": DCB}),
    Kind("ns-poisson", ("star", "vee", "diamond", "blackdiamond"), NSCOM + NSLIE + NSP,
         {"odot": ODOT_COM, "dcb": DCB}),
    Kind("ns-f-manifold", ("star", "vee", "diamond", "blackdiamond"), NSCOM + NSLIE + NSF,
         {"odot": ODOT_COM, "dcb": DCB}),
    Kind("ns-pre-lie", ("rtri", "ltri", "circ"), _nspl(True), {"odot": ODOT_NPL}),
    Kind("l-dendriform", ("rtri", "ltri"), _nspl(False), {"odot": ODOT_LD}),
)}

# slots a kind wants symmetric / skew; checked as identities, listed for builders
SYMMETRIC_SLOTS = {"dot", "vee"}
SKEW_SLOTS = {"bracket", "blackdiamond"}


# operator conditions, one per product slot
def nijenhuis_identity(slot: str):
    p, N = op(slot), lin("N")
    return identity(f"nijenhuis[{slot}]", ("x", "y"), p(N(x), N(y)),
                    N(p(N(x), y) + p(x, N(y)) - N(p(x, y))))


def reynolds_identity(slot: str):
    p, R = op(slot), lin("R")
    return identity(f"reynolds[{slot}]", ("x", "y"), p(R(x), R(y)),
                    R(p(R(x), y) + p(x, R(y)) - p(R(x), R(y))))


def derivation_identity():
    D = lin("D")
    return identity("derivation", ("x", "y"), D(dot(x, y)), dot(D(x), y) + dot(x, D(y)))


__all__ = ["KINDS", "Kind", "hm_P", "F1", "F2", "F3", "P_from_defects"]
