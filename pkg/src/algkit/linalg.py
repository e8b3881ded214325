"""Exact subspace arithmetic on coordinate rows (row reduction via sympy)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy


def _to_sympy(rows: Sequence[Sequence], n: int) -> sympy.Matrix:
    return sympy.Matrix(len(rows), n, lambda i, j: sympy.Rational(Fraction(rows[i][j]).numerator,
                                                                   Fraction(rows[i][j]).denominator))


def _from_sympy(x) -> Fraction:
    r = sympy.Rational(x)
    return Fraction(int(r.p), int(r.q))


def echelon(rows: Sequence[Sequence], n: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon basis of the span of rows, with pivot columns."""
    if not rows:
        return [], []
    R, pivots = _to_sympy(rows, n).rref()
    basis = [[_from_sympy(R[i, j]) for j in range(n)] for i in range(len(pivots))]
    return basis, list(pivots)


def rank(rows: Sequence[Sequence], n: int) -> int:
    return len(echelon(rows, n)[1])


def in_span(rows: Sequence[Sequence], v: Sequence, n: int) -> bool:
    return rank(list(rows) + [list(v)], n) == rank(rows, n)


def contains(big: Sequence[Sequence], small: Sequence[Sequence], n: int) -> bool:
    return rank(list(big) + list(small), n) == rank(big, n)


def complement(sub: Sequence[Sequence], whole: Sequence[Sequence], n: int) -> list[list[Fraction]]:
    """Rows of whole's echelon basis extending a basis of sub to one of whole."""
    out, current = [], list(sub)
    r = rank(current, n)
    for row in echelon(whole, n)[0]:
        if rank(current + [row], n) > r:
            current.append(row)
            out.append(row)
            r += 1
    return out


def coordinates(basis: Sequence[Sequence], v: Sequence, n: int) -> list[Fraction] | None:
    """c with sum c_i basis_i = v, or None if v is outside the span."""
    if not basis:
        return [] if all(Fraction(c) == 0 for c in v) else None
    M = _to_sympy(basis, n).T
    b = _to_sympy([list(v)], n).T
    try:
        sol, params = M.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return [_from_sympy(sol[i, 0]) for i in range(len(basis))]
