"""Brute-force searches that produce test instances.

Both searches run the literal oracle only, scan candidates in a fixed
order and return the first hit, so results are reproducible.  The package
is then checked against what they find.

ns-pre-lie deformation: dimension 2, order 2, no t^2 terms, zero circ.
Base rtri_0 has one or two nonzero constants in {-1, 1} and
ltri_0(x, y) = rtri_0(y, x).  The t^1 part is a single constant +-1 in
rtri_1.  Accept when the deformation identities hold through t^2 and the
limit bracket is nonzero.

filtration: dimension 3, basis f0, f1, f2, flag f0 < (f0, f1) < all.
succ and prec each have at most one nonzero constant equal to 1, vee is
zero.  Accept when the structure is ns-associative, products respect the
flag with the degree shifts of an NS-Lie filtration, and the associated
graded has a nonzero product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as cartesian

import oracle


def _zeros(n):
    return [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]


def _table(n, entries):
    t = _zeros(n)
    for i, j, k, c in entries:
        t[i][j][k] = Fraction(c)
    return t


def _flip(t):
    n = len(t)
    return [[[t[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def ns_pre_lie_deformation():
    """(rtri, ltri, circ) as lists of constant tables by power of t."""
    n = 2
    slots = list(cartesian(range(n), repeat=3))
    singles = [(s, c) for s in slots for c in (1, -1)]
    bases = [(a,) for a in singles] + [(a, b) for a, b in combinations(singles, 2) if a[0] != b[0]]
    for base in bases:
        r0 = _table(n, [(*s, c) for s, c in base])
        l0 = _flip(r0)
        # the base itself must already be a commutative ns-pre-lie structure
        o0 = oracle.Oracle({"rtri": [r0], "ltri": [l0], "circ": [_zeros(n)]}, {"A": n})
        if any(oracle.verdicts(o0, "ns-pre-lie").values()):
            continue
        for (i, j, k), c in singles:
            r1 = _table(n, [(i, j, k, c)])
            prods = {"rtri": [r0, r1, _zeros(n)], "ltri": [l0, _zeros(n), _zeros(n)],
                     "circ": [_zeros(n)] * 3}
            o = oracle.Oracle(prods, {"A": n}, order=2)
            if not any(oracle.deformation_verdicts(o, "ns-pre-lie").values()):
                return prods
    return None


def _respects(t, levels, shift):
    """x in A_n, y in A_m  =>  t(x, y) in A_{n+m+shift} for basis-aligned levels."""
    n = len(t)
    top = len(levels) - 1
    level_of = [min(k for k, lv in enumerate(levels) if i in lv) for i in range(n)]
    for i, j, k in cartesian(range(n), repeat=3):
        if t[i][j][k] != 0 and level_of[k] > min(level_of[i] + level_of[j] + shift, top):
            return False
    return True


@lru_cache(maxsize=None)
def filtered_ns_associative():
    """(succ, prec) constant tables of the first accepted dimension-3 instance."""
    n = 3
    levels = [{0}, {0, 1}, {0, 1, 2}]
    options = [None] + list(cartesian(range(n), repeat=3))
    for a, b in cartesian(options, repeat=2):
        succ = _table(n, [(*a, 1)] if a else [])
        prec = _table(n, [(*b, 1)] if b else [])
        o = oracle.Oracle({"succ": [succ], "prec": [prec], "vee": [_zeros(n)]}, {"A": n})
        if any(oracle.verdicts(o, "ns-associative").values()):
            continue
        skew = [[[succ[i][j][k] - prec[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
        if not (_respects(succ, levels, 0) and _respects(prec, levels, 0) and _respects(skew, levels, -1)):
            continue
        # nonzero graded product: some succ constant landing exactly at level n+m
        level_of = [0, 1, 2]
        if any(succ[i][j][k] and min(level_of[i], level_of[j]) >= 1 and level_of[k] == level_of[i] + level_of[j]
               for i, j, k in cartesian(range(n), repeat=3)):
            return succ, prec
    return None


@lru_cache(maxsize=None)
def first_instance(kind, slots, n=2):
    """First structure of the given kind on dimension n with every slot nonzero.

    Each slot gets at most two constants equal to 1; candidates run in
    lexicographic order of (slot choices).
    """
    cells = list(cartesian(range(n), repeat=3))
    choices = [()] + [(a,) for a in cells] + list(combinations(cells, 2))
    for pick in cartesian(choices, repeat=len(slots)):
        if not all(pick):
            continue
        prods = {s: [_table(n, [(*c, 1) for c in cs])] for s, cs in zip(slots, pick)}
        o = oracle.Oracle(prods, {"A": n})
        if not any(oracle.verdicts(o, kind).values()):
            return {s: t[0] for s, t in prods.items()}
    return None
