"""The interval [0,1] as a category, hom(x, y) = x -> y (``V``) or y -> x (``V_op``).

Ideals of either orientation come in two shapes: the representable ``y(L)``
and the weight generated by a strictly monotone net converging to ``L`` from
the side on which the hom is not already 1 (from below in ``V``, from above in
``V_op``).  Nets approaching from the other side generate ``y(L)``.  Every
quantity below is a one-sided limit of the residuation and is evaluated in
closed form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import SchemaError
from .quantale import ONE, ZERO, TNorm, diagonal_limit, q, residuate, residuate_limit

V = "V"
V_OP = "V_op"


@dataclass(frozen=True)
class ChainCat:
    tnorm: TNorm
    orientation: str = V

    def __post_init__(self):
        if self.orientation not in (V, V_OP):
            raise SchemaError(f"orientation must be {V!r} or {V_OP!r}")

    def hom(self, x, y) -> Fraction:
        x, y = q(x), q(y)
        if self.orientation == V:
            return residuate(self.tnorm, x, y)
        return residuate(self.tnorm, y, x)

    @property
    def approach_side(self) -> int:
        """Side from which non-representable ideals approach their colimit."""
        return -1 if self.orientation == V else 1

    def opposite(self) -> "ChainCat":
        return ChainCat(self.tnorm, V_OP if self.orientation == V else V)

    def to_json(self) -> dict:
        return {"chain": self.orientation, "tnorm": self.tnorm.to_json()}


@dataclass(frozen=True)
class ChainIdeal:
    limit: Fraction
    attained: bool

    def to_json(self) -> dict:
        return {"limit": str(self.limit), "attained": self.attained}


def make_chain_ideal(C: ChainCat, limit, attained: bool) -> ChainIdeal:
    L = q(limit)
    if not 0 <= L <= 1:
        raise SchemaError("ideal limit must lie in [0,1]")
    if not attained and ((C.approach_side < 0 and L == 0) or (C.approach_side > 0 and L == 1)):
        raise SchemaError(f"no strictly monotone net reaches {L} from that side")
    return ChainIdeal(L, bool(attained))


def hom_limit(C: ChainCat, x, y, vary: str, side: int) -> Fraction:
    """One-sided limit of ``C.hom(x, y)`` as argument ``vary`` ("x" or "y") moves from ``side``."""
    x, y = q(x), q(y)
    if C.orientation == V:
        return residuate_limit(C.tnorm, x, y, "x" if vary == "x" else "z", side)
    return residuate_limit(C.tnorm, y, x, "z" if vary == "x" else "x", side)


def eval_chain_ideal(C: ChainCat, I: ChainIdeal, y) -> Fraction:
    """``phi(y)``: ``hom(y, L)`` if attained, else the limit of ``hom(y, x)`` as ``x -> L``."""
    y = q(y)
    if I.attained:
        return C.hom(y, I.limit)
    return hom_limit(C, y, I.limit, "y", C.approach_side)


def eval_chain_coideal(C: ChainCat, I: ChainIdeal, y) -> Fraction:
    """The matching coweight: ``hom(L, y)`` or the limit of ``hom(x, y)`` as ``x -> L``."""
    y = q(y)
    if I.attained:
        return C.hom(I.limit, y)
    return hom_limit(C, I.limit, y, "x", C.approach_side)


def is_representable(C: ChainCat, I: ChainIdeal) -> bool:
    return I.attained or eval_chain_ideal(C, I, I.limit) == ONE


def is_cauchy_ideal(C: ChainCat, I: ChainIdeal) -> bool:
    """Whether the ideal is a Cauchy weight.

    Every chain ideal has a colimit, and a Cauchy weight with a colimit is
    representable, so this is representability.
    """
    return is_representable(C, I)


@dataclass(frozen=True)
class ChainColimit:
    colimit: Fraction
    representable: bool


def chain_colimit(C: ChainCat, I: ChainIdeal) -> ChainColimit:
    return ChainColimit(I.limit, is_representable(C, I))


def candidate_points(t: TNorm, extra=()) -> List[Fraction]:
    """Breakpoints, the extra points, and two interior points in every gap between them."""
    pts = sorted(set(t.breakpoints()) | {q(e) for e in extra})
    out = set(pts)
    for a, b in zip(pts, pts[1:]):
        out.add(a + (b - a) / 3)
        out.add(a + 2 * (b - a) / 3)
    return sorted(out)


def non_attained_limits(C: ChainCat, extra=()) -> List[Fraction]:
    pts = candidate_points(C.tnorm, extra)
    if C.approach_side < 0:
        return [p for p in pts if p > 0]
    return [p for p in pts if p < 1]


def chain_compact_check(C: ChainCat, a) -> bool:
    """Whether ``hom(a, colim I) = I(a)`` for every ideal ``I``.

    Representable ideals satisfy it trivially.  For the other shape both
    sides are one closed-form branch of the residuation on every gap between
    breakpoints and ``a``, so the candidate limits decide it.
    """
    a = q(a)
    for L in non_attained_limits(C, extra=(a,)):
        I = ChainIdeal(L, False)
        if C.hom(a, L) != eval_chain_ideal(C, I, a):
            return False
    return True


def _approached_by_compacts(C: ChainCat, x: Fraction) -> bool:
    """Whether compact points accumulate at ``x`` from the approach side."""
    pts = C.tnorm.breakpoints()
    if C.approach_side < 0:
        below = [p for p in pts if p < x]
        if not below:
            return False
        probe = x - (x - below[-1]) / 2
    else:
        above = [p for p in pts if p > x]
        if not above:
            return False
        probe = x + (above[0] - x) / 2
    return chain_compact_check(C, probe)


def chain_algebraic(C: ChainCat) -> Tuple[bool, Optional[Fraction]]:
    """Algebraic iff every point is compact or a colimit of a monotone net of compacts.

    Yoneda completeness holds on the chain (every ideal has colimit ``L``).
    Compactness is constant on open gaps between breakpoints, so probing one
    point per gap decides accumulation of compacts.
    """
    for x in candidate_points(C.tnorm):
        if not chain_compact_check(C, x) and not _approached_by_compacts(C, x):
            return False, x
    return True, None


def chain_continuous(C: ChainCat) -> bool:
    """``V_op`` always is; ``V`` is iff ``->`` is continuous off the diagonal.

    Off the diagonal the residuation can only jump across the lines through
    breakpoints, so it is compared there with its four one-sided limits.
    """
    if C.orientation == V_OP:
        return True
    t = C.tnorm
    pts = candidate_points(t)
    for x in pts:
        for z in pts:
            if x == z:
                continue
            v = residuate(t, x, z)
            for vary, moving in (("x", x), ("z", z)):
                for side in (-1, 1):
                    if (side < 0 and moving == 0) or (side > 0 and moving == 1):
                        continue
                    other = z if vary == "x" else x
                    # stay off the diagonal
                    if moving == other:
                        continue
                    if residuate_limit(t, x, z, vary, side) != v:
                        return False
    return True


@dataclass(frozen=True)
class ChainVerdict:
    orientation: str
    smyth_complete: bool
    smyth_completable: bool
    algebraic: bool
    continuous: bool
    certificate: Optional[ChainIdeal]
    algebraic_failure: Optional[Fraction]

    def to_json(self) -> dict:
        return {
            "orientation": self.orientation,
            "smyth_complete": self.smyth_complete,
            "smyth_completable": self.smyth_completable,
            "yoneda_complete": True,
            "algebraic": self.algebraic,
            "continuous": self.continuous,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "algebraic_failure": None if self.algebraic_failure is None else str(self.algebraic_failure),
        }


def chain_verdict(C: ChainCat) -> ChainVerdict:
    cert = None
    completable = True
    for L in non_attained_limits(C):
        I = ChainIdeal(L, False)
        if cert is None and not is_representable(C, I):
            cert = I
        if not is_cauchy_ideal(C, I):
            completable = False
    alg, where = chain_algebraic(C)
    return ChainVerdict(C.orientation, cert is None, completable, alg, chain_continuous(C), cert, where)


@dataclass(frozen=True)
class ChainReport:
    tnorm: TNorm
    V: ChainVerdict
    V_op: ChainVerdict

    def to_json(self) -> dict:
        return {"tnorm": self.tnorm.to_json(), "V": self.V.to_json(), "V_op": self.V_op.to_json()}


def chain_completeness_report(t: TNorm) -> ChainReport:
    return ChainReport(t, chain_verdict(ChainCat(t, V)), chain_verdict(ChainCat(t, V_OP)))
