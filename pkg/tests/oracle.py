"""Literal brute-force evaluator for every identity the package verifies.

Written independently of the package: plain lists of Fractions, one basis
tuple at a time, every identity spelled out term by term.  Coordinates are
truncated polynomials in t so the same code checks deformations; an
ordinary structure is the order-0 case.
"""

from fractions import Fraction
from itertools import product as cartesian


def _parity(e):
    return -1 if e % 2 else 1


class Oracle:
    """products: slot -> list (by power of t) of c[i][j][k];
    maps: name -> matrix M[i][j] (coefficient of e_i in M(e_j));
    dims: space role -> dimension; degrees: graded degree list."""

    def __init__(self, products, dims, maps=None, degrees=None, shifts=None, order=0):
        self.products = products
        self.maps = maps or {}
        self.dims = dims
        self.degrees = degrees
        self.shifts = shifts or {}
        self.order = order

    # truncated polynomial arithmetic
    def pzero(self):
        return tuple(Fraction(0) for _ in range(self.order + 1))

    def padd(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def pmul(self, a, b):
        out = [Fraction(0)] * (self.order + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if i + j <= self.order:
                    out[i + j] += ai * bj
        return tuple(out)

    def pscale(self, c, a):
        return tuple(Fraction(c) * x for x in a)

    # vectors
    def basis(self, role, i):
        n = self.dims[role]
        one = tuple([Fraction(1)] + [Fraction(0)] * self.order)
        return [one if k == i else self.pzero() for k in range(n)]

    def zero(self, n):
        return [self.pzero() for _ in range(n)]

    def add(self, *vs):
        out = vs[0]
        for v in vs[1:]:
            out = [self.padd(a, b) for a, b in zip(out, v)]
        return list(out)

    def scale(self, c, v):
        return [self.pscale(c, a) for a in v]

    def neg(self, v):
        return self.scale(-1, v)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def P(self, slot, u, v):
        tables = self.products[slot]
        c0 = tables[0]
        nout = len(c0[0][0]) if c0 and c0[0] else 0
        out = [[Fraction(0)] * (self.order + 1) for _ in range(nout)]
        for i, ui in enumerate(u):
            if not any(ui):
                continue
            for j, vj in enumerate(v):
                if not any(vj):
                    continue
                uv = self.pmul(ui, vj)
                for k in range(nout):
                    for power, c in enumerate(tables):
                        if power > self.order:
                            break
                        ck = c[i][j][k]
                        if ck == 0:
                            continue
                        for a in range(self.order + 1 - power):
                            out[k][a + power] += ck * uv[a]
        return [tuple(x) for x in out]

    def M(self, name, v):
        m = self.maps[name]
        rows = len(m)
        out = []
        for i in range(rows):
            acc = self.pzero()
            for j, vj in enumerate(v):
                if m[i][j] != 0:
                    acc = self.padd(acc, self.pscale(m[i][j], vj))
            out.append(acc)
        return out

    # graded helpers: operate on homogeneous components
    def components(self, v):
        return [(i, self.basis_like(i, c)) for i, c in enumerate(v) if any(c)]

    def basis_like(self, i, coeff):
        v = self.zero(len(self.degrees))
        v[i] = coeff
        return v

    def deg(self, i):
        return self.degrees[i]


def _vec_eq(a, b):
    return all(x == y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# ungraded identities; each maps basis vectors to (lhs, rhs)

def odot_com(o, a, b):
    return o.add(o.P("star", a, b), o.P("star", b, a), o.P("vee", a, b))


def dcb(o, a, b):
    return o.add(o.P("diamond", a, b), o.neg(o.P("diamond", b, a)), o.P("blackdiamond", a, b))


def odot_nsa(o, a, b):
    return o.add(o.P("prec", a, b), o.P("succ", a, b), o.P("vee", a, b))


def odot_npl(o, a, b):
    out = o.add(o.P("rtri", a, b), o.P("ltri", a, b))
    if "circ" in o.products:
        out = o.add(out, o.P("circ", a, b))
    return out


def F1(o, x, y, z):
    return o.sub(o.sub(o.P("diamond", x, o.P("star", y, z)), o.P("star", y, o.P("diamond", x, z))),
                 o.P("star", dcb(o, x, y), z))


def F2(o, x, y, z):
    return o.sub(o.add(o.P("star", x, o.P("diamond", y, z)), o.P("star", y, o.P("diamond", x, z))),
                 o.P("diamond", odot_com(o, x, y), z))


def F3(o, x, y, z):
    pos = o.add(o.P("blackdiamond", x, odot_com(o, y, z)), o.P("diamond", x, o.P("vee", y, z)))
    neg = o.add(o.P("star", z, o.P("blackdiamond", x, y)), o.P("star", y, o.P("blackdiamond", x, z)),
                o.P("vee", y, dcb(o, x, z)), o.P("vee", dcb(o, x, y), z))
    return o.sub(pos, neg)


def HM_P(o, x, y, z):
    return o.sub(o.P("bracket", x, o.P("dot", y, z)),
                 o.add(o.P("dot", o.P("bracket", x, y), z), o.P("dot", y, o.P("bracket", x, z))))


def _commutativity(o, x, y):
    return o.P("dot", x, y), o.P("dot", y, x)


def _associativity(o, x, y, z):
    return o.P("dot", o.P("dot", x, y), z), o.P("dot", x, o.P("dot", y, z))


def _skew(o, x, y):
    return o.P("bracket", x, y), o.neg(o.P("bracket", y, x))


def _jacobi(o, x, y, z):
    b = lambda a, c: o.P("bracket", a, c)
    return o.add(b(x, b(y, z)), b(y, b(z, x)), b(z, b(x, y))), o.zero(len(x))


def _leibniz(o, x, y, z):
    return (o.P("bracket", x, o.P("dot", y, z)),
            o.add(o.P("dot", o.P("bracket", x, y), z), o.P("dot", y, o.P("bracket", x, z))))


def _hm(o, x, y, z, w):
    return (HM_P(o, o.P("dot", x, y), z, w),
            o.add(o.P("dot", x, HM_P(o, y, z, w)), o.P("dot", y, HM_P(o, x, z, w))))


def _zinbiel(o, x, y, z):
    s = lambda a, b: o.P("star", a, b)
    return s(x, s(y, z)), s(o.add(s(x, y), s(y, x)), z)


def _prelie(o, x, y, z):
    d = lambda a, b: o.P("diamond", a, b)
    return o.sub(d(x, d(y, z)), d(d(x, y), z)), o.sub(d(y, d(x, z)), d(d(y, x), z))


def _pp1(o, x, y, z):
    s = lambda a, b: o.P("star", a, b)
    d = lambda a, b: o.P("diamond", a, b)
    return s(o.sub(d(x, y), d(y, x)), z), o.sub(d(x, s(y, z)), s(y, d(x, z)))


def _pp2(o, x, y, z):
    s = lambda a, b: o.P("star", a, b)
    d = lambda a, b: o.P("diamond", a, b)
    return d(o.add(s(x, y), s(y, x)), z), o.add(s(x, d(y, z)), s(y, d(x, z)))


def _nsalg1(o, x, y, z):
    p = lambda a, b: o.P("prec", a, b)
    return p(p(x, y), z), p(x, odot_nsa(o, y, z))


def _nsalg2(o, x, y, z):
    p = lambda a, b: o.P("prec", a, b)
    s = lambda a, b: o.P("succ", a, b)
    return p(s(x, y), z), s(x, p(y, z))


def _nsalg3(o, x, y, z):
    s = lambda a, b: o.P("succ", a, b)
    return s(odot_nsa(o, x, y), z), s(x, s(y, z))


def _nsalg4(o, x, y, z):
    p = lambda a, b: o.P("prec", a, b)
    s = lambda a, b: o.P("succ", a, b)
    v = lambda a, b: o.P("vee", a, b)
    return (o.add(p(v(x, y), z), v(odot_nsa(o, x, y), z)),
            o.add(s(x, v(y, z)), v(x, odot_nsa(o, y, z))))


def _vee_sym(o, x, y):
    return o.P("vee", x, y), o.P("vee", y, x)


def _nscom1(o, x, y, z):
    return o.P("star", x, o.P("star", y, z)), o.P("star", odot_com(o, x, y), z)


def _nscom2(o, x, y, z):
    s = lambda a, b: o.P("star", a, b)
    v = lambda a, b: o.P("vee", a, b)
    return (o.add(s(x, v(y, z)), v(x, odot_com(o, y, z))),
            o.add(s(y, v(x, z)), v(y, odot_com(o, x, z))))


def _bd_skew(o, x, y):
    return o.P("blackdiamond", x, y), o.neg(o.P("blackdiamond", y, x))


def _nsl1(o, x, y, z):
    d = lambda a, b: o.P("diamond", a, b)
    lhs = o.add(d(x, d(y, z)), o.neg(d(d(x, y), z)), o.neg(d(y, d(x, z))), d(d(y, x), z))
    return lhs, d(o.P("blackdiamond", x, y), z)


def _nsl2(o, x, y, z):
    d = lambda a, b: o.P("diamond", a, b)
    k = lambda a, b: o.P("blackdiamond", a, b)
    lhs = o.add(k(x, dcb(o, y, z)), k(y, dcb(o, z, x)), k(z, dcb(o, x, y)),
                d(x, k(y, z)), d(y, k(z, x)), d(z, k(x, y)))
    return lhs, o.zero(len(x))


def _nsp1(o, x, y, z):
    s = lambda a, b: o.P("star", a, b)
    d = lambda a, b: o.P("diamond", a, b)
    return s(dcb(o, x, y), z), o.sub(d(x, s(y, z)), s(y, d(x, z)))


def _nsp2(o, x, y, z):
    s = lambda a, b: o.P("star", a, b)
    d = lambda a, b: o.P("diamond", a, b)
    return d(odot_com(o, x, y), z), o.add(s(x, d(y, z)), s(y, d(x, z)))


def _nsp3(o, x, y, z):
    s = lambda a, b: o.P("star", a, b)
    d = lambda a, b: o.P("diamond", a, b)
    v = lambda a, b: o.P("vee", a, b)
    k = lambda a, b: o.P("blackdiamond", a, b)
    lhs = o.add(k(x, odot_com(o, y, z)), d(x, v(y, z)))
    rhs = o.add(v(dcb(o, x, y), z), s(z, k(x, y)), v(y, dcb(o, x, z)), s(y, k(x, z)))
    return lhs, rhs


def _Pfrom(o, x, y, z):
    return o.add(F1(o, x, y, z), F1(o, x, z, y), F2(o, y, z, x), F3(o, x, y, z))


def _nsf1(o, x, y, z, w):
    s = lambda a, b: o.P("star", a, b)
    return F1(o, odot_com(o, x, y), z, w), o.add(s(x, F1(o, y, z, w)), s(y, F1(o, x, z, w)))


def _nsf2(o, x, y, z, w):
    s = lambda a, b: o.P("star", a, b)
    return s(_Pfrom(o, x, y, z), w), o.sub(F2(o, y, z, s(x, w)), s(x, F2(o, y, z, w)))


def _nsf3(o, x, y, z, w):
    s = lambda a, b: o.P("star", a, b)
    v = lambda a, b: o.P("vee", a, b)
    lhs = o.add(F3(o, odot_com(o, x, y), z, w), F2(o, z, w, v(y, x)))
    rhs = o.add(s(x, F3(o, y, z, w)), s(y, F3(o, x, z, w)),
                v(x, _Pfrom(o, y, z, w)), v(y, _Pfrom(o, x, z, w)))
    return lhs, rhs


def _nspl1(o, x, y, z):
    r = lambda a, b: o.P("rtri", a, b)
    return o.sub(r(odot_npl(o, x, y), z), r(x, r(y, z))), o.sub(r(odot_npl(o, y, x), z), r(y, r(x, z)))


def _nspl2(o, x, y, z):
    r = lambda a, b: o.P("rtri", a, b)
    l = lambda a, b: o.P("ltri", a, b)
    return o.sub(r(x, l(y, z)), l(r(x, y), z)), o.sub(l(y, odot_npl(o, x, z)), l(l(y, x), z))


def _nspl3(o, x, y, z):
    r = lambda a, b: o.P("rtri", a, b)
    l = lambda a, b: o.P("ltri", a, b)
    c = lambda a, b: o.P("circ", a, b)

    def side(a, b):
        return o.add(c(odot_npl(o, a, b), z), o.neg(c(a, odot_npl(o, b, z))),
                     l(c(a, b), z), o.neg(r(a, c(b, z))))
    return side(x, y), side(y, x)


COM = [("commutativity", 2, _commutativity), ("associativity", 3, _associativity)]
LIE = [("skew-symmetry", 2, _skew), ("jacobi", 3, _jacobi)]
NSCOM = [("vee-symmetry", 2, _vee_sym), ("nscom-1", 3, _nscom1), ("nscom-2", 3, _nscom2)]
NSLIE = [("blackdiamond-skew", 2, _bd_skew), ("nslie-1", 3, _nsl1), ("nslie-2", 3, _nsl2)]

KINDS = {
    "associative": [("associativity", 3, _associativity)],
    "commutative-associative": COM,
    "lie": LIE,
    "poisson": COM + LIE + [("leibniz", 3, _leibniz)],
    "f-manifold": COM + LIE + [("hertling-manin", 4, _hm)],
    "zinbiel": [("zinbiel", 3, _zinbiel)],
    "pre-lie": [("pre-lie", 3, _prelie)],
    "pre-poisson": [("zinbiel", 3, _zinbiel), ("pre-lie", 3, _prelie),
                    ("pre-poisson-1", 3, _pp1), ("pre-poisson-2", 3, _pp2)],
    "ns-associative": [("nsalg-1", 3, _nsalg1), ("nsalg-2", 3, _nsalg2),
                       ("nsalg-3", 3, _nsalg3), ("nsalg-4", 3, _nsalg4)],
    "ns-commutative": NSCOM,
    "ns-lie": NSLIE,
    "ns-poisson": NSCOM + NSLIE + [("nsp-1", 3, _nsp1), ("nsp-2", 3, _nsp2), ("nsp-3", 3, _nsp3)],
    "ns-f-manifold": NSCOM + NSLIE + [("nsf-1", 4, _nsf1), ("nsf-2", 4, _nsf2), ("nsf-3", 4, _nsf3)],
    "ns-pre-lie": [("nspl-1", 3, _nspl1), ("nspl-2", 3, _nspl2), ("nspl-3", 3, _nspl3)],
    "l-dendriform": [("nspl-1", 3, _nspl1), ("nspl-2", 3, _nspl2)],
}


def first_failure(o, arity, fn, roles=None):
    """Smallest basis tuple (lexicographic) where fn's sides differ, else None."""
    roles = roles or ["A"] * arity
    ranges = [range(o.dims[r]) for r in roles]
    for tup in cartesian(*ranges):
        vs = [o.basis(r, i) for r, i in zip(roles, tup)]
        lhs, rhs = fn(o, *vs)
        if not _vec_eq(lhs, rhs):
            return tup
    return None


def first_failure_by_power(o, arity, fn, roles=None):
    """(power, tuple) of the first coefficient mismatch, scanning powers first."""
    roles = roles or ["A"] * arity
    ranges = [range(o.dims[r]) for r in roles]
    bad = {}
    for tup in cartesian(*ranges):
        vs = [o.basis(r, i) for r, i in zip(roles, tup)]
        lhs, rhs = fn(o, *vs)
        for k in range(len(lhs)):
            for n in range(o.order + 1):
                if lhs[k][n] != rhs[k][n] and n not in bad:
                    bad[n] = tup
    if not bad:
        return None
    n = min(bad)
    return n, bad[n]


def verdicts(o, kind):
    return {name: first_failure(o, arity, fn) for name, arity, fn in KINDS[kind]}


def deformation_verdicts(o, kind):
    return {name: first_failure_by_power(o, arity, fn) for name, arity, fn in KINDS[kind]}


# ---------------------------------------------------------------------------
# operators

def _nij(slot):
    def fn(o, x, y):
        N = lambda v: o.M("N", v)
        p = lambda a, b: o.P(slot, a, b)
        return p(N(x), N(y)), N(o.sub(o.add(p(N(x), y), p(x, N(y))), N(p(x, y))))
    return fn


def _rey(slot):
    def fn(o, x, y):
        R = lambda v: o.M("R", v)
        p = lambda a, b: o.P(slot, a, b)
        return p(R(x), R(y)), R(o.sub(o.add(p(R(x), y), p(x, R(y))), p(R(x), R(y))))
    return fn


def _derivation(o, x, y):
    D = lambda v: o.M("D", v)
    p = lambda a, b: o.P("dot", a, b)
    return D(p(x, y)), o.add(p(D(x), y), p(x, D(y)))


def operator_verdicts(o, which, slots):
    if which == "derivation":
        return {"derivation": first_failure(o, 2, _derivation)}
    make = _nij if which == "nijenhuis" else _rey
    return {f"{which}[{s}]": first_failure(o, 2, make(s)) for s in slots}


# ---------------------------------------------------------------------------
# representations, cocycles, twisted Rota-Baxter.  Roles: A algebra, V module.

def _mu_assoc(o, x, y, v):
    return o.P("mu", o.P("dot", x, y), v), o.P("mu", x, o.P("mu", y, v))


def _mu_comm(o, x, y, v):
    return o.P("mu", x, o.P("mu", y, v)), o.P("mu", y, o.P("mu", x, v))


def _rho_lie(o, x, y, v):
    return (o.P("rho", o.P("bracket", x, y), v),
            o.sub(o.P("rho", x, o.P("rho", y, v)), o.P("rho", y, o.P("rho", x, v))))


def _Rrep(o, x, y, v):
    return o.sub(o.sub(o.P("rho", x, o.P("mu", y, v)), o.P("mu", y, o.P("rho", x, v))),
                 o.P("mu", o.P("bracket", x, y), v))


def _Srep(o, x, y, v):
    return o.sub(o.add(o.P("mu", x, o.P("rho", y, v)), o.P("mu", y, o.P("rho", x, v))),
                 o.P("rho", o.P("dot", x, y), v))


def _rp1(o, x, y, v):
    return _Rrep(o, x, y, v), o.zero(len(v))


def _rp2(o, x, y, v):
    return _Srep(o, x, y, v), o.zero(len(v))


def _fr1(o, x, y, z, v):
    mu = lambda a, b: o.P("mu", a, b)
    return _Rrep(o, o.P("dot", x, y), z, v), o.add(mu(x, _Rrep(o, y, z, v)), mu(y, _Rrep(o, x, z, v)))


def _fr2(o, x, y, z, v):
    mu = lambda a, b: o.P("mu", a, b)
    return mu(HM_P(o, x, y, z), v), o.sub(_Srep(o, y, z, mu(x, v)), mu(x, _Srep(o, y, z, v)))


REP_BASE = [("mu-associativity", ["A", "A", "V"], _mu_assoc),
            ("mu-commutativity", ["A", "A", "V"], _mu_comm),
            ("rho-lie", ["A", "A", "V"], _rho_lie)]
REPS = {
    "poisson": REP_BASE + [("rep-poisson-1", ["A", "A", "V"], _rp1),
                           ("rep-poisson-2", ["A", "A", "V"], _rp2)],
    "f-manifold": REP_BASE + [("fman-rep-1", ["A", "A", "A", "V"], _fr1),
                              ("fman-rep-2", ["A", "A", "A", "V"], _fr2)],
}


def _h_sym(o, x, y):
    return o.P("h", x, y), o.P("h", y, x)


def _harrison(o, x, y, z):
    h = lambda a, b: o.P("h", a, b)
    mu = lambda a, b: o.P("mu", a, b)
    dot = lambda a, b: o.P("dot", a, b)
    return o.add(mu(x, h(y, z)), h(x, dot(y, z))), o.add(mu(y, h(x, z)), h(y, dot(x, z)))


def _H_skew(o, x, y):
    return o.P("H", x, y), o.neg(o.P("H", y, x))


def _ce(o, x, y, z):
    H = lambda a, b: o.P("H", a, b)
    rho = lambda a, b: o.P("rho", a, b)
    br = lambda a, b: o.P("bracket", a, b)
    lhs = o.add(rho(x, H(y, z)), rho(y, H(z, x)), rho(z, H(x, y)),
                H(x, br(y, z)), H(y, br(z, x)), H(z, br(x, y)))
    return lhs, o.zero(len(lhs))


def _pcompat(o, x, y, z):
    h = lambda a, b: o.P("h", a, b)
    H = lambda a, b: o.P("H", a, b)
    mu = lambda a, b: o.P("mu", a, b)
    rho = lambda a, b: o.P("rho", a, b)
    br = lambda a, b: o.P("bracket", a, b)
    dot = lambda a, b: o.P("dot", a, b)
    return (o.add(H(x, dot(y, z)), rho(x, h(y, z))),
            o.add(h(br(x, y), z), mu(z, H(x, y)), h(y, br(x, z)), mu(y, H(x, z))))


COCYCLE = [("h-symmetry", ["A", "A"], _h_sym), ("harrison", ["A", "A", "A"], _harrison),
           ("H-skew", ["A", "A"], _H_skew), ("chevalley-eilenberg", ["A", "A", "A"], _ce),
           ("poisson-compat", ["A", "A", "A"], _pcompat)]


def _tw1(o, u, v):
    R = lambda a: o.M("R", a)
    return (o.P("dot", R(u), R(v)),
            R(o.add(o.P("mu", R(u), v), o.P("mu", R(v), u), o.P("h", R(u), R(v)))))


def _tw2(o, u, v):
    R = lambda a: o.M("R", a)
    return (o.P("bracket", R(u), R(v)),
            R(o.add(o.P("rho", R(u), v), o.neg(o.P("rho", R(v), u)), o.P("H", R(u), R(v)))))


TWISTED = [("twisted-rb-1", ["V", "V"], _tw1), ("twisted-rb-2", ["V", "V"], _tw2)]


def role_verdicts(o, table):
    return {name: first_failure(o, len(roles), fn, roles) for name, roles, fn in table}


# ---------------------------------------------------------------------------
# graded identities.  Inputs are basis vectors together with their indices;
# sigma is the suspension of the bracket-type products (1 for shift -1).

def _gflip_apply(o, slot, a, b, sign):
    """sum over homogeneous parts of sign(|a_i|,|b_j|) * (b_j slot a_i)."""
    out = o.zero(len(a))
    for i, ai in enumerate(a):
        if not any(ai):
            continue
        for j, bj in enumerate(b):
            if not any(bj):
                continue
            s = sign(o.deg(i), o.deg(j))
            term = o.P(slot, o.basis_like(j, bj), o.basis_like(i, ai))
            out = o.add(out, o.scale(s, term))
    return out


def g_odot(o, a, b):
    flip = _gflip_apply(o, "star", a, b, lambda p, q: _parity(p * q))
    return o.add(o.P("star", a, b), flip, o.P("vee", a, b))


def g_dcb(o, a, b, sg):
    flip = _gflip_apply(o, "diamond", a, b, lambda p, q: _parity((p - sg) * (q - sg)))
    return o.add(o.P("diamond", a, b), o.neg(flip), o.P("blackdiamond", a, b))


def graded_verdicts(o, kind, sigma):
    n = len(o.degrees)
    d = o.degrees
    S = lambda e: _parity(e)
    P = o.P
    results = {}

    def scan(name, arity, fn):
        for tup in cartesian(*[range(n)] * arity):
            vs = [o.basis("A", i) for i in tup]
            degs = [d[i] for i in tup]
            lhs, rhs = fn(vs, degs)
            if not _vec_eq(lhs, rhs):
                results[name] = tup
                return
        results[name] = None

    sg = sigma
    if kind == "gerstenhaber":
        scan("commutativity", 2, lambda v, g: (P("dot", v[0], v[1]), o.scale(S(g[0] * g[1]), P("dot", v[1], v[0]))))
        scan("associativity", 3, lambda v, g: (P("dot", P("dot", v[0], v[1]), v[2]), P("dot", v[0], P("dot", v[1], v[2]))))
        scan("skew-symmetry", 2, lambda v, g: (P("bracket", v[0], v[1]),
                                               o.scale(-S((g[0] - sg) * (g[1] - sg)), P("bracket", v[1], v[0]))))

        def jac(v, g):
            x, y, z = v
            a, b, c = g
            B = lambda p, q: P("bracket", p, q)
            lhs = o.add(o.scale(S((a - sg) * (c - sg)), B(B(x, y), z)),
                        o.scale(S((b - sg) * (a - sg)), B(B(y, z), x)),
                        o.scale(S((c - sg) * (b - sg)), B(B(z, x), y)))
            return lhs, o.zero(n)
        scan("jacobi", 3, jac)

        def leib(v, g):
            x, y, z = v
            B = lambda p, q: P("bracket", p, q)
            return (B(x, P("dot", y, z)),
                    o.add(P("dot", B(x, y), z), o.scale(S((g[0] - sg) * g[1]), P("dot", y, B(x, z)))))
        scan("leibniz", 3, leib)
        return results

    if kind in ("graded-ns-commutative", "ns-gerstenhaber"):
        scan("vee-symmetry", 2, lambda v, g: (P("vee", v[0], v[1]), o.scale(S(g[0] * g[1]), P("vee", v[1], v[0]))))
        scan("nscom-1", 3, lambda v, g: (P("star", v[0], P("star", v[1], v[2])), P("star", g_odot(o, v[0], v[1]), v[2])))

        def c2(v, g):
            x, y, z = v
            lhs = o.add(P("star", x, P("vee", y, z)), P("vee", x, g_odot(o, y, z)))
            rhs = o.add(P("star", y, P("vee", x, z)), P("vee", y, g_odot(o, x, z)))
            return lhs, o.scale(S(g[0] * g[1]), rhs)
        scan("nscom-2", 3, c2)

    if kind in ("graded-ns-lie", "ns-gerstenhaber"):
        K = lambda p, q: P("blackdiamond", p, q)
        Dm = lambda p, q: P("diamond", p, q)
        scan("blackdiamond-skew", 2, lambda v, g: (K(v[0], v[1]), o.scale(-S((g[0] - sg) * (g[1] - sg)), K(v[1], v[0]))))

        def l1(v, g):
            x, y, z = v
            a, b = g[0] - sg, g[1] - sg
            lhs = o.sub(o.sub(Dm(x, Dm(y, z)), Dm(Dm(x, y), z)),
                        o.scale(S(a * b), o.sub(Dm(y, Dm(x, z)), Dm(Dm(y, x), z))))
            return lhs, Dm(K(x, y), z)
        scan("nslie-1", 3, l1)

        def l2(v, g):
            x, y, z = v
            a, b, c = (e - sg for e in g)
            lhs = o.add(Dm(x, K(y, z)), K(x, g_dcb(o, y, z, sg)),
                        o.scale(S(a * (b + c)), o.add(Dm(y, K(z, x)), K(y, g_dcb(o, z, x, sg)))),
                        o.scale(S(c * (a + b)), o.add(Dm(z, K(x, y)), K(z, g_dcb(o, x, y, sg)))))
            return lhs, o.zero(n)
        scan("nslie-2", 3, l2)

    if kind == "ns-gerstenhaber":
        St = lambda p, q: P("star", p, q)
        Dm = lambda p, q: P("diamond", p, q)
        V_ = lambda p, q: P("vee", p, q)
        K = lambda p, q: P("blackdiamond", p, q)

        def g1(v, g):
            x, y, z = v
            return St(g_dcb(o, x, y, sg), z), o.sub(Dm(x, St(y, z)), o.scale(S((g[0] - sg) * g[1]), St(y, Dm(x, z))))
        scan("nsp-1", 3, g1)

        def g2(v, g):
            x, y, z = v
            return Dm(g_odot(o, x, y), z), o.add(St(x, Dm(y, z)), o.scale(S(g[0] * g[1]), St(y, Dm(x, z))))
        scan("nsp-2", 3, g2)

        def g3(v, g):
            x, y, z = v
            a, b, c = g
            lhs = o.add(K(x, g_odot(o, y, z)), Dm(x, V_(y, z)))
            rhs = o.add(V_(g_dcb(o, x, y, sg), z),
                        o.scale(S(c * (a + b - sg)), St(z, K(x, y))),
                        o.scale(S((a - sg) * b), o.add(V_(y, g_dcb(o, x, z, sg)), St(y, K(x, z)))))
            return lhs, rhs
        scan("nsp-3", 3, g3)
    return results


def graded_nijenhuis_verdicts(o, slots):
    return {f"nijenhuis[{s}]": first_failure(o, 2, _nij(s)) for s in slots}
