"""Continuous t-norms on [0,1] as exact ordinal sums.

A t-norm is stored as a finite list of pieces ``(lo, hi, kind)``; on the
square ``[lo, hi]^2`` the multiplication is the basic product or Lukasiewicz
t-norm transported by the affine map ``s -> (s - lo) / (hi - lo)``, and it is
the minimum everywhere else.  All values are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import SchemaError

PRODUCT = "product"
LUKASIEWICZ = "lukasiewicz"
KINDS = (PRODUCT, LUKASIEWICZ)

ZERO = Fraction(0)
ONE = Fraction(1)

Number = Union[Fraction, int, str]


def q(value: Number) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction or a 'p/q' string")
    return Fraction(value)


def grid_denominator(default: int = 256) -> int:
    """Oracle grid resolution; ``ENRICHKIT_GRID_DENOM`` overrides it."""
    raw = os.environ.get("ENRICHKIT_GRID_DENOM")
    if raw:
        return int(raw)
    return default


def grid(denom: int) -> list[Fraction]:
    return [Fraction(k, denom) for k in range(denom + 1)]


@dataclass(frozen=True)
class Piece:
    lo: Fraction
    hi: Fraction
    kind: str

    def contains_closed(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def contains_open(self, x: Fraction) -> bool:
        return self.lo < x < self.hi


@dataclass(frozen=True)
class TNorm:
    """A continuous t-norm given as an ordinal sum of basic pieces.

    Build instances with :func:`make_ordinal_sum` (or the ``godel``,
    ``product`` and ``lukasiewicz`` shortcuts) so that the pieces are checked.
    """

    pieces: Tuple[Piece, ...] = ()

    # -- structure ---------------------------------------------------------
    @property
    def is_archimedean(self) -> bool:
        return len(self.pieces) == 1 and self.pieces[0].lo == 0 and self.pieces[0].hi == 1

    @property
    def name(self) -> str:
        if not self.pieces:
            return "godel"
        if self.is_archimedean:
            return self.pieces[0].kind
        body = ",".join(f"{p.kind}[{p.lo},{p.hi}]" for p in self.pieces)
        return f"ordinal_sum({body})"

    def breakpoints(self) -> list[Fraction]:
        """Sorted piece endpoints together with 0 and 1."""
        pts = {ZERO, ONE}
        for p in self.pieces:
            pts.add(p.lo)
            pts.add(p.hi)
        return sorted(pts)

    def _common_piece(self, x: Fraction, y: Fraction) -> Optional[Piece]:
        for p in self.pieces:
            if p.contains_closed(x) and p.contains_closed(y):
                return p
        return None

    def piece_above(self, x: Fraction) -> Optional[Piece]:
        """Piece ``p`` with ``p.lo <= x < p.hi`` (the piece a right neighbourhood of x lies in)."""
        for p in self.pieces:
            if p.lo <= x < p.hi:
                return p
        return None

    def piece_below(self, x: Fraction) -> Optional[Piece]:
        """Piece ``p`` with ``p.lo < x <= p.hi``."""
        for p in self.pieces:
            if p.lo < x <= p.hi:
                return p
        return None

    # -- arithmetic --------------------------------------------------------
    def __call__(self, x: Number, y: Number) -> Fraction:
        return tnorm_apply(self, x, y)

    def residuate(self, x: Number, z: Number) -> Fraction:
        return residuate(self, x, z)

    def to_json(self) -> dict:
        return {
            "pieces": [
                {"lo": _fmt(p.lo), "hi": _fmt(p.hi), "kind": p.kind} for p in self.pieces
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "TNorm":
        if not isinstance(data, dict) or "pieces" not in data:
            raise SchemaError("t-norm JSON needs a 'pieces' list")
        try:
            raw = [(q(p["lo"]), q(p["hi"]), p["kind"]) for p in data["pieces"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad t-norm piece: {exc}") from exc
        return make_ordinal_sum(raw)


def _fmt(x: Fraction) -> str:
    return str(x)


def make_ordinal_sum(pieces: Iterable[Sequence]) -> TNorm:
    """Validate ``(lo, hi, kind)`` triples and return the ordinal-sum t-norm."""
    built = []
    for raw in pieces:
        if isinstance(raw, Piece):
            lo, hi, kind = raw.lo, raw.hi, raw.kind
        else:
            lo, hi, kind = raw
        lo, hi = q(lo), q(hi)
        if kind not in KINDS:
            raise SchemaError(f"unknown piece kind {kind!r}")
        if not (0 <= lo < hi <= 1):
            raise SchemaError(f"piece ({lo}, {hi}) must satisfy 0 <= lo < hi <= 1")
        built.append(Piece(lo, hi, kind))
    built.sort(key=lambda p: p.lo)
    for left, right in zip(built, built[1:]):
        if right.lo < left.hi:
            raise SchemaError(
                f"pieces ({left.lo}, {left.hi}) and ({right.lo}, {right.hi}) overlap"
            )
    return TNorm(tuple(built))


def godel() -> TNorm:
    return TNorm(())


def product() -> TNorm:
    return make_ordinal_sum([(0, 1, PRODUCT)])


def lukasiewicz() -> TNorm:
    return make_ordinal_sum([(0, 1, LUKASIEWICZ)])


def by_name(name: str) -> TNorm:
    table = {"godel": godel, "minimum": godel, "product": product, "lukasiewicz": lukasiewicz}
    try:
        return table[name]()
    except KeyError:
        raise SchemaError(f"unknown t-norm name {name!r}") from None


# Basic t-norms on [0,1] and their residua, used on rescaled coordinates.

def _basic_mul(kind: str, u: Fraction, v: Fraction) -> Fraction:
    if kind == PRODUCT:
        return u * v
    return max(ZERO, u + v - 1)


def _basic_res(kind: str, u: Fraction, w: Fraction) -> Fraction:
    if u <= w:
        return ONE
    if kind == PRODUCT:
        return w / u
    return min(ONE, 1 - u + w)


def tnorm_apply(t: TNorm, x: Number, y: Number) -> Fraction:
    x, y = q(x), q(y)
    p = t._common_piece(x, y)
    if p is None:
        return min(x, y)
    width = p.hi - p.lo
    u = (x - p.lo) / width
    v = (y - p.lo) / width
    return p.lo + width * _basic_mul(p.kind, u, v)


def residuate(t: TNorm, x: Number, z: Number) -> Fraction:
    """``x -> z``: the largest y with ``x & y <= z``."""
    x, z = q(x), q(z)
    if x <= z:
        return ONE
    # x > z: only a piece holding both z and x can lift the answer above z
    p = t._common_piece(x, z)
    if p is None:
        return z
    width = p.hi - p.lo
    u = (x - p.lo) / width
    w = (z - p.lo) / width
    return p.lo + width * _basic_res(p.kind, u, w)


def co_residual(t: TNorm, c: Number, r: Number) -> Tuple[Fraction, bool]:
    """Least ``s`` with ``s & c >= r``, plus whether that least value is attained.

    Returns ``(1, False)`` when no ``s`` works, i.e. when ``r > c``.  For a
    continuous t-norm the infimum is always attained when it exists.
    """
    c, r = q(c), q(r)
    if r > c:
        return ONE, False
    if r <= 0:
        return ZERO, True
    for p in t.pieces:
        if p.lo < r and c <= p.hi:
            width = p.hi - p.lo
            rho = (r - p.lo) / width
            gamma = (c - p.lo) / width
            if p.kind == PRODUCT:
                s = rho / gamma
            else:
                s = 1 + rho - gamma
            return p.lo + width * s, True
    return r, True


def is_idempotent(t: TNorm, p: Number) -> bool:
    p = q(p)
    return tnorm_apply(t, p, p) == p


def least_idempotent_above(t: TNorm, a: Number) -> Fraction:
    a = q(a)
    for p in t.pieces:
        if p.contains_open(a):
            return p.hi
    return a


def idempotent_intervals(t: TNorm) -> list[Tuple[Fraction, Fraction]]:
    """Maximal closed intervals of idempotents (degenerate intervals allowed)."""
    out = []
    start = ZERO
    for p in t.pieces:
        out.append((start, p.lo))
        start = p.hi
    out.append((start, ONE))
    return out


# Limits of the residuation -------------------------------------------------

def residuate_limit(t: TNorm, x: Number, z: Number, vary: str, side: int) -> Fraction:
    """One-sided limit of ``x -> z`` as the ``vary`` argument approaches its value.

    ``vary`` is ``"x"`` or ``"z"`` and ``side`` is ``-1`` (from below) or ``+1``
    (from above).  The residuation is given by one closed-form branch on a
    punctured one-sided neighbourhood free of breakpoints; that branch is
    located with a probe point and then evaluated at the limit point.
    """
    x, z = q(x), q(z)
    if side not in (-1, 1) or vary not in ("x", "z"):
        raise ValueError("vary must be 'x' or 'z' and side must be -1 or +1")
    moving, fixed = (x, z) if vary == "x" else (z, x)
    if (side < 0 and moving <= 0) or (side > 0 and moving >= 1):
        raise ValueError("cannot approach the boundary of [0,1] from outside")
    cuts = set(t.breakpoints()) | {fixed}
    gaps = [abs(c - moving) for c in cuts if c != moving]
    eps = min(gaps) / 2
    probe = moving + side * eps
    px, pz = (probe, z) if vary == "x" else (x, probe)
    if px <= pz:
        return ONE
    p = t._common_piece(px, pz)
    if p is None:
        return z
    if p.kind == LUKASIEWICZ:
        return min(ONE, p.hi - x + z)
    if x == p.lo:
        # only reachable with z == p.lo too: the ratio (z - lo)/(x - lo) is 0 on the branch
        return p.lo
    return p.lo + (p.hi - p.lo) * min(ONE, (z - p.lo) / (x - p.lo))


def diagonal_limit(t: TNorm, point: Number, side: int) -> Fraction:
    """``liminf`` of ``y -> x`` over pairs ``x < y`` both tending to ``point`` from ``side``."""
    point = q(point)
    if side < 0:
        if point <= 0:
            raise ValueError("no pairs approach 0 from below")
        p = t.piece_below(point)
        return p.hi if p is not None else point
    if point >= 1:
        raise ValueError("no pairs approach 1 from above")
    p = t.piece_above(point)
    if p is None:
        return point
    if p.kind == PRODUCT and point == p.lo:
        return p.lo
    return p.hi
