"""Independent reference computations used only by the tests.

Nothing here calls the closed forms under test: t-norms are re-derived from
their piece formulas, residuation is a grid search refined by bisection, and
category-level quantities are brute-force sup/inf loops.
"""
from fractions import Fraction
from math import floor

from enrichkit.quantale import grid_denominator

ONE = Fraction(1)
ZERO = Fraction(0)


def piece_mul(pieces, x, y):
    """Ordinal sum written out directly: rescaled basic t-norm inside a square, min elsewhere."""
    for lo, hi, kind in pieces:
        if lo <= x <= hi and lo <= y <= hi:
            if kind == "product":
                return lo + (x - lo) * (y - lo) / (hi - lo)
            return max(lo, x + y - hi)
    return min(x, y)


def pieces_of(t):
    return [(p.lo, p.hi, p.kind) for p in t.pieces]


def mul_for(t):
    ps = pieces_of(t)
    return lambda x, y: piece_mul(ps, x, y)


def simplest_between(lo, hi):
    """Rational with the smallest denominator in ``[lo, hi]`` (continued fractions)."""
    fl = floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl < floor(hi):
        return Fraction(fl + 1)
    rest = simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / rest


def grid_sup_residuate(mul, x, z, denom=None, steps=64):
    """``sup {y : mul(x, y) <= z}`` by a grid scan, bisection, then snapping to the simplest rational."""
    denom = denom or grid_denominator()
    if mul(x, ONE) <= z:
        return ONE
    k = max(k for k in range(denom + 1) if mul(x, Fraction(k, denom)) <= z)
    lo, hi = Fraction(k, denom), Fraction(k + 1, denom)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if mul(x, mid) <= z:
            lo = mid
        else:
            hi = mid
    return simplest_between(lo, hi - Fraction(1, 2 ** (steps + 20)))


def grid_inf_co_residual(mul, c, r, denom=None):
    """Least grid point ``s`` with ``mul(s, c) >= r``, or None."""
    denom = denom or grid_denominator()
    for k in range(denom + 1):
        s = Fraction(k, denom)
        if mul(s, c) >= r:
            return s
    return None


# -- category level ----------------------------------------------------------------

def is_category(mul, hom):
    n = len(hom)
    if any(hom[i][i] != ONE for i in range(n)):
        return False
    return all(mul(hom[y][z], hom[x][y]) <= hom[x][z] for x in range(n) for y in range(n) for z in range(n))


def is_weight(mul, hom, vals):
    n = len(hom)
    return all(mul(vals[y], hom[x][y]) <= vals[x] for x in range(n) for y in range(n))


def separated(hom):
    n = len(hom)
    return not any(hom[i][j] == ONE and hom[j][i] == ONE for i in range(n) for j in range(n) if i != j)


def compose_tables(mul, psi, phi):
    """``(psi . phi)(x, z) = max_y psi(y, z) & phi(x, y)`` on raw tables."""
    rows, mid, cols = len(phi), len(psi), len(psi[0])
    return [[max(mul(psi[y][z], phi[x][y]) for y in range(mid)) for z in range(cols)] for x in range(rows)]


def up_set_topology(hom):
    """Opens of the Alexandroff topology of the underlying preorder (up-closed sets)."""
    n = len(hom)
    opens = set()
    for mask in range(1 << n):
        U = frozenset(i for i in range(n) if mask >> i & 1)
        if all(j in U for i in U for j in range(n) if hom[i][j] == ONE):
            opens.add(U)
    return frozenset(opens)


def numeric_limit(f, point, side, depth=40):
    """Value of ``f`` at ``point + side * 2**-depth``: a proxy for the one-sided limit."""
    return f(point + side * Fraction(1, 2 ** depth))
