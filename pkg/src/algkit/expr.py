"""Multilinear expressions and their exact evaluation as tensors.

An identity is two sums of terms.  A term is a binary tree of named
products and linear maps whose leaves are the identity's variables, each
used once.  Evaluating a tree gives one tensor holding its value on every
basis tuple at once, so checking an identity over all tuples is a handful
of integer matrix products.  Values are truncated power series in t, so
the same code checks formal deformations coefficientwise; an ordinary
structure is the order-0 case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .tensor import QTensor


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    slot: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Lin:
    op: str
    arg: "Node"


Node = Var | App | Lin


@dataclass(frozen=True)
class Form:
    """Affine integer form in the degrees of variables: sum c_v |v| + const."""

    coeffs: tuple[tuple[str, int], ...] = ()
    const: int = 0

    def __add__(self, other):
        if isinstance(other, int):
            return Form(self.coeffs, self.const + other)
        merged = dict(self.coeffs)
        for v, c in other.coeffs:
            merged[v] = merged.get(v, 0) + c
        return Form(tuple(sorted(merged.items())), self.const + other.const)

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return self + Form(tuple((v, -c) for v, c in other.coeffs), -other.const)


def deg(*names: str) -> Form:
    return Form(tuple(sorted((n, 1) for n in names)))


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    node: Node
    signs: tuple[tuple[Form, Form], ...] = ()


@dataclass(frozen=True)
class Expr:
    terms: tuple[Term, ...] = ()

    def __add__(self, other):
        return Expr(self.terms + as_expr(other).terms)

    def __radd__(self, other):
        if other == 0:
            return self
        return as_expr(other) + self

    def __sub__(self, other):
        return self + (-as_expr(other))

    def __neg__(self):
        return self.scaled(-1)

    def __rmul__(self, c):
        return self.scaled(c)

    def scaled(self, c):
        c = Fraction(c)
        return Expr(tuple(Term(t.coeff * c, t.node, t.signs) for t in self.terms))

    def koszul(self, a: Form, b: Form) -> "Expr":
        """Multiply every term by (-1)^(a*b)."""
        return Expr(tuple(Term(t.coeff, t.node, t.signs + ((a, b),)) for t in self.terms))


ZERO = Expr()


def as_expr(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, (Var, App, Lin)):
        return Expr((Term(Fraction(1), x),))
    if x == 0:
        return ZERO
    raise TypeError(f"cannot use {x!r} in an expression")


def variables(*names: str) -> tuple[Expr, ...]:
    return tuple(as_expr(Var(n)) for n in names)


def op(slot: str):
    """Binary product symbol; distributes over sums in both arguments."""

    def apply(a, b) -> Expr:
        out = []
        for s in as_expr(a).terms:
            for t in as_expr(b).terms:
                out.append(Term(s.coeff * t.coeff, App(slot, s.node, t.node), s.signs + t.signs))
        return Expr(tuple(out))

    apply.slot = slot
    return apply


def lin(name: str):
    def apply(a) -> Expr:
        return Expr(tuple(Term(t.coeff, Lin(name, t.node), t.signs) for t in as_expr(a).terms))

    return apply


@dataclass(frozen=True)
class Identity:
    name: str
    variables: tuple[str, ...]
    lhs: Expr
    rhs: Expr
    roles: tuple[str, ...] = ()
    out_role: str = "A"

    def role(self, v: str) -> str:
        if not self.roles:
            return "A"
        return self.roles[self.variables.index(v)]


def identity(name, vars_, lhs, rhs=0, roles=(), out_role="A") -> Identity:
    return Identity(name, tuple(vars_), as_expr(lhs), as_expr(rhs), tuple(roles), out_role)


@dataclass
class Context:
    """Tensors an identity is evaluated against.

    products: slot -> list of coefficient tensors by power of t, each of
    shape (left dim, right dim, out dim); maps: name -> matrix (out, in);
    dims: role -> dimension; degrees: role -> integer degree per basis
    element (graded checks only).
    """

    products: Mapping[str, Sequence[QTensor | None]]
    dims: Mapping[str, int]
    maps: Mapping[str, QTensor] = field(default_factory=dict)
    degrees: Mapping[str, Sequence[int]] = field(default_factory=dict)
    order: int = 0
    _memo: dict = field(default_factory=dict, repr=False)

    def product(self, slot: str, power: int):
        series = self.products[slot]
        if power < len(series):
            return series[power]
        return None


def _prod(shape) -> int:
    n = 1
    for s in shape:
        n *= s
    return n


def _eval(ctx: Context, node, roles: Mapping[str, str]):
    """(variables in axis order, list of tensors by power; None means zero)."""
    key = (node, tuple(sorted(roles.items())))
    if key in ctx._memo:
        return ctx._memo[key]
    m = ctx.order
    if isinstance(node, Var):
        n = ctx.dims[roles[node.name]]
        out = ((node.name,), [QTensor.identity(n)] + [None] * m)
    elif isinstance(node, Lin):
        M = ctx.maps[node.op]
        vs, series = _eval(ctx, node.arg, roles)
        Mt = M.transpose(1, 0)
        new = []
        for t in series:
            if t is None or M.is_zero():
                new.append(None)
                continue
            lead = t.shape[:-1]
            r = t.reshape(_prod(lead), t.shape[-1]).matmul(Mt)
            new.append(r.reshape(*lead, M.shape[0]))
        out = (vs, new)
    else:
        lv, ls = _eval(ctx, node.left, roles)
        rv, rs = _eval(ctx, node.right, roles)
        new = [None] * (m + 1)
        for i, lt in enumerate(ls):
            if lt is None:
                continue
            for p in range(m + 1 - i):
                P = ctx.product(node.slot, p)
                if P is None or P.is_zero():
                    continue
                lp = _left_contract(lt, P, isinstance(node.left, Var))
                for j, rt in enumerate(rs):
                    if rt is None or i + j + p > m:
                        continue
                    val = _right_contract(lp, rt, isinstance(node.right, Var))
                    k = i + j + p
                    new[k] = val if new[k] is None else new[k] + val
        if not set(lv).isdisjoint(rv):
            raise ValueError(f"variable used twice in {node}")
        out = (lv + rv, new)
    ctx._memo[key] = out
    return out


def _left_contract(lt: QTensor, P: QTensor, is_leaf: bool):
    """sum_p L[a.., p] P[p, q, k] as (lead shape, tensor (Asz, q, k))."""
    p, q, k = P.shape
    if is_leaf:
        return (p,), P
    lead = lt.shape[:-1]
    asz = _prod(lead)
    r = lt.reshape(asz, p).matmul(P.reshape(p, q * k))
    return lead, r.reshape(asz, q, k)


def _right_contract(lp, rt: QTensor, is_leaf: bool) -> QTensor:
    lead, t = lp
    asz, q, k = t.shape
    if is_leaf:
        return t.reshape(*lead, q, k)
    blead = rt.shape[:-1]
    bsz = _prod(blead)
    left = t.transpose(0, 2, 1).reshape(asz * k, q)
    right = rt.reshape(bsz, q).transpose(1, 0)
    r = left.matmul(right).reshape(asz, k, bsz).transpose(0, 2, 1)
    return r.reshape(*lead, *blead, k)


def _sign_array(ctx: Context, ident: Identity, signs) -> np.ndarray | None:
    if not signs:
        return None
    nv = len(ident.variables)
    total = 0
    for a, b in signs:
        total = total + _form_array(ctx, ident, a, nv) * _form_array(ctx, ident, b, nv)
    par = np.asarray(total) % 2
    return np.where(par == 1, -1, 1).astype(object)


def _form_array(ctx: Context, ident: Identity, f: Form, nv: int):
    out = f.const
    for v, c in f.coeffs:
        pos = ident.variables.index(v)
        d = np.asarray(ctx.degrees[ident.role(v)], dtype=np.int64)
        shape = [1] * nv
        shape[pos] = d.shape[0]
        out = out + c * d.reshape(shape)
    return out


def evaluate_side(ctx: Context, ident: Identity, side: Expr) -> list[QTensor]:
    """Sum of a side's terms as tensors over (variables..., output), by power."""
    roles = {v: ident.role(v) for v in ident.variables}
    shape = tuple(ctx.dims[ident.role(v)] for v in ident.variables) + (ctx.dims[ident.out_role],)
    acc = [QTensor.zeros(shape) for _ in range(ctx.order + 1)]
    for term in side.terms:
        vs, series = _eval(ctx, term.node, roles)
        if sorted(vs) != sorted(ident.variables):
            raise ValueError(f"term {term.node} of {ident.name} does not use every variable once")
        perm = [vs.index(v) for v in ident.variables] + [len(vs)]
        signs = _sign_array(ctx, ident, term.signs)
        for n, t in enumerate(series):
            if t is None:
                continue
            t = t.transpose(*perm).scale(term.coeff)
            if signs is not None:
                t = t.mul_elementwise_int(signs[..., None])
            acc[n] = acc[n] + t
    return acc


def first_mismatch(ctx: Context, ident: Identity):
    """None, or (power, index tuple, lhs tensor series, rhs tensor series)."""
    lhs = evaluate_side(ctx, ident, ident.lhs)
    rhs = evaluate_side(ctx, ident, ident.rhs)
    for n in range(ctx.order + 1):
        mask = lhs[n].mismatch_mask(rhs[n])
        if mask.ndim == 0:
            if bool(mask):
                return n, (), lhs, rhs
            continue
        hits = np.argwhere(mask)
        if len(hits):
            return n, tuple(int(i) for i in hits[0]), lhs, rhs
    return None
