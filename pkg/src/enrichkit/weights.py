"""Weights and coweights of a finite category: colimits, Cauchy weights, ideals."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .category import EnrichedCat, is_separated, opposite, terminal
from .distributors import (
    Distributor,
    FunctorMap,
    check_adjoint,
    compose,
    extend_left,
    graph_of,
    identity,
)
from .errors import AxiomViolation, MismatchError, SchemaError
from .quantale import ONE, ZERO, TNorm, co_residual, q, residuate, tnorm_apply

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Weight:
    """A weight ``phi: X -+-> *``; ``values[i] = phi(elements[i])``."""

    base: EnrichedCat
    values: Vector

    def __call__(self, x) -> Fraction:
        return self.values[self.base.index(x)]

    def as_distributor(self) -> Distributor:
        return Distributor(self.base, terminal(self.base.tnorm), tuple((v,) for v in self.values))

    def to_json(self) -> dict:
        return {"base": list(self.base.elements), "values": [str(v) for v in self.values]}


@dataclass(frozen=True)
class Coweight:
    """A coweight ``psi: * -+-> X``."""

    base: EnrichedCat
    values: Vector

    def __call__(self, x) -> Fraction:
        return self.values[self.base.index(x)]

    def as_distributor(self) -> Distributor:
        return Distributor(terminal(self.base.tnorm), self.base, (tuple(self.values),))

    def as_weight_of_opposite(self) -> Weight:
        return Weight(opposite(self.base), self.values)


def weight_violation(X: EnrichedCat, values: Sequence[Fraction]) -> Optional[Tuple[int, int]]:
    """Pair ``(x, y)`` with ``phi(y) & X(x,y) > phi(x)``, or None."""
    for x in range(X.size):
        for y in range(X.size):
            if tnorm_apply(X.tnorm, values[y], X.hom[x][y]) > values[x]:
                return x, y
    return None


def make_weight(X: EnrichedCat, values, check: bool = True) -> Weight:
    if len(values) != X.size:
        raise SchemaError(f"weight needs {X.size} values")
    vals = tuple(q(v) for v in values)
    if any(not 0 <= v <= 1 for v in vals):
        raise SchemaError("weight values must lie in [0,1]")
    if check:
        bad = weight_violation(X, vals)
        if bad is not None:
            x, y = X.elements[bad[0]], X.elements[bad[1]]
            raise AxiomViolation(f"not a weight: phi({y}) & X({x},{y}) > phi({x})", (x, y))
    return Weight(X, vals)


def make_coweight(X: EnrichedCat, values, check: bool = True) -> Coweight:
    w = make_weight(opposite(X), values, check)
    return Coweight(X, w.values)


def representable(X: EnrichedCat, a) -> Weight:
    i = X.index(a)
    return Weight(X, tuple(X.hom[x][i] for x in range(X.size)))


def corepresentable(X: EnrichedCat, a) -> Coweight:
    i = X.index(a)
    return Coweight(X, tuple(X.hom[i]))


def repair_to_weight(X: EnrichedCat, values) -> Weight:
    """Least weight pointwise above ``values`` (closure under the left action)."""
    vals = [q(v) for v in values]
    changed = True
    while changed:
        changed = False
        for x in range(X.size):
            for y in range(X.size):
                v = tnorm_apply(X.tnorm, vals[y], X.hom[x][y])
                if v > vals[x]:
                    vals[x] = v
                    changed = True
    return Weight(X, tuple(vals))


def _check_base(a, b):
    if a.base != b.base:
        raise MismatchError("weights over different categories")


def sub(phi1, phi2) -> Fraction:
    """``inf_x phi1(x) -> phi2(x)``: the hom of the weight (or fuzzy powerset) category."""
    _check_base(phi1, phi2)
    t = phi1.base.tnorm
    return min((residuate(t, a, b) for a, b in zip(phi1.values, phi2.values)), default=ONE)


def join(phi1: Weight, phi2: Weight) -> Weight:
    _check_base(phi1, phi2)
    return Weight(phi1.base, tuple(max(a, b) for a, b in zip(phi1.values, phi2.values)))


def meet(phis: Sequence[Weight]) -> Weight:
    base = phis[0].base
    return Weight(base, tuple(min(vs) for vs in zip(*(p.values for p in phis))))


def scale(r, phi: Weight) -> Weight:
    """``r & phi``: the tensor of ``r`` with ``phi`` among weights."""
    r = q(r)
    return Weight(phi.base, tuple(tnorm_apply(phi.base.tnorm, r, v) for v in phi.values))


def coscale(r, phi: Weight) -> Weight:
    """``r -> phi``: the cotensor of ``r`` with ``phi`` among weights."""
    r = q(r)
    return Weight(phi.base, tuple(residuate(phi.base.tnorm, r, v) for v in phi.values))


# -- colimits -----------------------------------------------------------------

def upper_extension(phi: Weight) -> Coweight:
    """The coweight ``X <- phi``, i.e. ``x |-> sub(phi, y(x))``."""
    X = phi.base
    d = extend_left(identity(X), phi.as_distributor())
    return Coweight(X, d.table[0])


def colimit_class(phi: Weight) -> Tuple[int, ...]:
    """Indices of all colimits of ``phi`` (an isomorphism class, possibly empty)."""
    X = phi.base
    psi = upper_extension(phi).values
    return tuple(a for a in range(X.size) if X.hom[a] == psi)


def colimit(phi: Weight) -> Optional[str]:
    """Canonical (least-index) colimit of ``phi``, or None."""
    cls = colimit_class(phi)
    return phi.base.elements[cls[0]] if cls else None


def limit_class(psi: Coweight) -> Tuple[int, ...]:
    return colimit_class(psi.as_weight_of_opposite())


def limit(psi: Coweight) -> Optional[str]:
    cls = limit_class(psi)
    return psi.base.elements[cls[0]] if cls else None


def is_representable(phi: Weight) -> bool:
    return representing_elements(phi) != ()


def representing_elements(phi: Weight) -> Tuple[int, ...]:
    X = phi.base
    return tuple(a for a in range(X.size) if tuple(X.hom[x][a] for x in range(X.size)) == phi.values)


def pull_back_weight(f: FunctorMap, phi: Weight) -> Weight:
    """``phi . f^*``: the weight of the target that ``f`` sends ``phi`` to."""
    if phi.base != f.source:
        raise MismatchError("weight must live on the functor's source")
    _, upper, _ = graph_of(f)
    d = compose(phi.as_distributor(), upper)
    return Weight(f.target, tuple(row[0] for row in d.table))


def weighted_colimit(f: FunctorMap, phi: Weight) -> Optional[str]:
    """Colimit of ``f`` weighted by ``phi``, i.e. the colimit of ``phi . f^*``."""
    return colimit(pull_back_weight(f, phi))


def colimit_in_values(phi: Weight, psi: Coweight) -> Fraction:
    """Weighted colimit of a functor ``psi: X -> V`` by ``phi``; a truth value."""
    _check_base(phi, psi)
    t = phi.base.tnorm
    return max((tnorm_apply(t, a, b) for a, b in zip(phi.values, psi.values)), default=ZERO)


def limit_in_values(psi: Coweight, xi: Coweight) -> Fraction:
    """Limit of a functor ``xi: X -> V`` coweighted by ``psi``; equals ``sub(psi, xi)``."""
    return sub(psi, xi)


def tensor_class(X: EnrichedCat, r, x) -> Tuple[int, ...]:
    """Elements ``e`` with ``X(e, y) = r -> X(x, y)`` for all ``y``."""
    r, i = q(r), X.index(x)
    row = tuple(residuate(X.tnorm, r, X.hom[i][y]) for y in range(X.size))
    return tuple(e for e in range(X.size) if X.hom[e] == row)


def cotensor_class(X: EnrichedCat, r, y) -> Tuple[int, ...]:
    """Elements ``e`` with ``X(x, e) = r -> X(x, y)`` for all ``x``."""
    r, j = q(r), X.index(y)
    col = tuple(residuate(X.tnorm, r, X.hom[x][j]) for x in range(X.size))
    return tuple(e for e in range(X.size) if tuple(X.hom[x][e] for x in range(X.size)) == col)


def tensor_cotensor(X: EnrichedCat, r, x) -> Tuple[Optional[str], Optional[str]]:
    t, c = tensor_class(X, r, x), cotensor_class(X, r, x)
    return (X.elements[t[0]] if t else None, X.elements[c[0]] if c else None)


def join_in_order(X: EnrichedCat, subset: Sequence[int]) -> Optional[int]:
    """Least-index join of ``subset`` in the underlying preorder, or None."""
    for e in range(X.size):
        if all(
            (X.hom[e][z] == ONE) == all(X.hom[a][z] == ONE for a in subset) for z in range(X.size)
        ):
            return e
    return None


def join_of_tensors(f: FunctorMap, phi: Weight) -> Optional[str]:
    """Join in the underlying order of ``{phi(k) (x) f(k)}``; None if a piece is missing."""
    X = f.target
    parts = []
    for k in range(f.source.size):
        cls = tensor_class(X, phi.values[k], f.assignment[k])
        if not cls:
            return None
        parts.append(cls[0])
    e = join_in_order(X, parts)
    return None if e is None else X.elements[e]


# -- exhaustive decisions over all radii ---------------------------------------

def radius_candidates(X: EnrichedCat) -> List[Fraction]:
    """Breakpoints for ``r |-> r -> c`` over hom-values c, plus two interior points per gap.

    Every ``r -> c`` is given by a single continuous monotone branch on each
    open gap between consecutive breakpoints, so these points decide
    questions that quantify over all ``r`` in [0,1].
    """
    pts = set(X.tnorm.breakpoints())
    for row in X.hom:
        pts.update(row)
    pts = sorted(pts)
    out = list(pts)
    for a, b in zip(pts, pts[1:]):
        out.append(a + (b - a) / 3)
        out.append(a + 2 * (b - a) / 3)
    return sorted(out)


def _gaps(X: EnrichedCat):
    pts = set(X.tnorm.breakpoints())
    for row in X.hom:
        pts.update(row)
    pts = sorted(pts)
    return pts, [(a + (b - a) / 3, a + 2 * (b - a) / 3) for a, b in zip(pts, pts[1:])]


def tensored(X: EnrichedCat) -> Tuple[bool, Optional[Tuple[Fraction, str]]]:
    pts, gaps = _gaps(X)
    t = X.tnorm
    for x in range(X.size):
        for r in pts:
            if not tensor_class(X, r, x):
                return False, (r, X.elements[x])
        for r1, r2 in gaps:
            v1 = [residuate(t, r1, c) for c in X.hom[x]]
            v2 = [residuate(t, r2, c) for c in X.hom[x]]
            if v1 != v2 or not tensor_class(X, r1, x):
                # a moving row takes infinitely many values; finitely many rows cannot match them
                return False, (r1, X.elements[x])
    return True, None


def cotensored(X: EnrichedCat) -> Tuple[bool, Optional[Tuple[Fraction, str]]]:
    return tensored(opposite(X))


def all_joins(X: EnrichedCat) -> Tuple[bool, Optional[Tuple[str, ...]]]:
    for k in range(X.size + 1):
        for subset in itertools.combinations(range(X.size), k):
            if join_in_order(X, subset) is None:
                return False, tuple(X.elements[i] for i in subset)
    return True, None


# -- Cauchy weights and ideals ----------------------------------------------

@dataclass(frozen=True)
class CauchyVerdict:
    cauchy: bool
    left_adjoint: Coweight
    failure: Optional[str] = None

    def __bool__(self):
        return self.cauchy


def is_cauchy_weight(phi: Weight) -> CauchyVerdict:
    """Decide whether ``phi`` is a right adjoint distributor.

    The only possible left adjoint is ``X <- phi``, so it is computed and the
    unit and counit inequalities are checked exactly.
    """
    X = phi.base
    psi = upper_extension(phi)
    ok = check_adjoint(psi.as_distributor(), phi.as_distributor())
    if ok:
        return CauchyVerdict(True, psi)
    unit = colimit_in_values(phi, psi)
    if unit < ONE:
        return CauchyVerdict(False, psi, f"unit: sup_x phi(x) & psi(x) = {unit} < 1")
    for x in range(X.size):
        for y in range(X.size):
            if tnorm_apply(X.tnorm, psi.values[y], phi.values[x]) > X.hom[x][y]:
                return CauchyVerdict(
                    False, psi, f"counit: psi({X.elements[y]}) & phi({X.elements[x]}) > X({X.elements[x]},{X.elements[y]})"
                )
    return CauchyVerdict(False, psi, "adjunction fails")


@dataclass(frozen=True)
class IdealVerdict:
    ideal: bool
    inhabited: bool
    dominators: Dict[Tuple[str, str], str] = field(default_factory=dict)
    undominated_pair: Optional[Tuple[str, str]] = None

    def __bool__(self):
        return self.ideal


def ball_dominates(phi: Weight, x: int, z: int) -> bool:
    """Whether every ball ``(x, r)`` with ``r < phi(x)`` sits below some ``(z, t)`` with ``t < phi(z)``.

    ``(x, r) <= (z, t)`` means ``r <= t & X(x, z)``.  The least usable ``t``
    for radius ``r`` is the co-residual of ``r`` along ``X(x, z)``; it is
    strictly increasing and left continuous in ``r`` on ``(0, X(x, z)]``, so
    the supremum over ``r < phi(x)`` is the co-residual at ``phi(x)`` itself
    and is never reached.  A bound strictly below ``phi(z)`` is therefore
    available for every ``r`` exactly when that supremum is at most
    ``phi(z)`` and is attained.
    """
    X = phi.base
    p = phi.values[x]
    if p == 0:
        return True
    least, attained = co_residual(X.tnorm, X.hom[x][z], p)
    if p > X.hom[x][z]:
        return False
    if attained:
        return least <= phi.values[z]
    return least < phi.values[z]


def is_ideal(phi: Weight) -> IdealVerdict:
    """Decide ideals by inhabitedness plus directedness of the formal balls inside ``phi``."""
    X = phi.base
    vals = phi.values
    inhabited = max(vals, default=ZERO) == ONE
    if not inhabited:
        return IdealVerdict(False, False)
    support = [x for x in range(X.size) if vals[x] > 0]
    witnesses = {}
    for x, y in itertools.combinations_with_replacement(support, 2):
        for z in range(X.size):
            if ball_dominates(phi, x, z) and ball_dominates(phi, y, z):
                witnesses[(X.elements[x], X.elements[y])] = X.elements[z]
                break
        else:
            return IdealVerdict(False, True, witnesses, (X.elements[x], X.elements[y]))
    return IdealVerdict(True, True, witnesses)


def tensor_preserved(phi: Weight, lam: Weight, r) -> bool:
    """Instance of ``sub(phi, r & lam) = r & sub(phi, lam)``."""
    r = q(r)
    return sub(phi, scale(r, lam)) == tnorm_apply(phi.base.tnorm, r, sub(phi, lam))


def binary_join_preserved(phi: Weight, lam: Weight, mu: Weight) -> bool:
    """Instance of ``sub(phi, lam v mu) = sub(phi, lam) v sub(phi, mu)``."""
    return sub(phi, join(lam, mu)) == max(sub(phi, lam), sub(phi, mu))


# -- sampling -----------------------------------------------------------------

def value_pool(X: EnrichedCat) -> List[Fraction]:
    pts = set(X.tnorm.breakpoints())
    for row in X.hom:
        pts.update(row)
    pts.update(Fraction(k, 8) for k in range(9))
    return sorted(pts)


def structured_weights(X: EnrichedCat, radii: Optional[Sequence[Fraction]] = None) -> List[Weight]:
    """Representables, their joins, and their tensors/cotensors by the given radii."""
    if radii is None:
        radii = radius_candidates(X)
    reps = [representable(X, a) for a in range(X.size)]
    out = list(reps)
    for k in range(2, X.size + 1):
        for combo in itertools.combinations(reps, k):
            w = combo[0]
            for other in combo[1:]:
                w = join(w, other)
            out.append(w)
    for r in radii:
        for a, rep in enumerate(reps):
            out.append(scale(r, rep))
            out.append(coscale(r, rep))
            out.append(lower_bounds(corepresentable_scaled(X, r, a)))
    return _dedupe(out)


def corepresentable_scaled(X: EnrichedCat, r, a) -> Coweight:
    """The coweight ``r & X(a, -)``."""
    r = q(r)
    return Coweight(X, tuple(tnorm_apply(X.tnorm, r, v) for v in X.hom[X.index(a)]))


def lower_bounds(psi: Coweight) -> Weight:
    """The weight ``x |-> inf_z psi(z) -> X(x, z)``; its colimit is the limit of ``psi`` when that exists."""
    X = psi.base
    return Weight(
        X,
        tuple(
            min((residuate(X.tnorm, psi.values[z], X.hom[x][z]) for z in range(X.size)), default=ONE)
            for x in range(X.size)
        ),
    )


def random_weights(X: EnrichedCat, rng: random.Random, count: int) -> List[Weight]:
    pool = value_pool(X)
    out = []
    for _ in range(count):
        vec = [rng.choice(pool) for _ in range(X.size)]
        if rng.random() < 0.5 and X.size:
            vec[rng.randrange(X.size)] = ONE
        out.append(repair_to_weight(X, vec))
    return out


def sample_weights(X: EnrichedCat, rng: Optional[random.Random] = None, random_count: int = 20) -> List[Weight]:
    rng = rng or random.Random(0)
    return _dedupe(structured_weights(X) + random_weights(X, rng, random_count))


def _dedupe(ws: List[Weight]) -> List[Weight]:
    seen, out = set(), []
    for w in ws:
        if w.values not in seen:
            seen.add(w.values)
            out.append(w)
    return out


# -- completeness ---------------------------------------------------------------

@dataclass(frozen=True)
class CompletenessReport:
    tensored: bool
    cotensored: bool
    all_joins: bool
    cocomplete: bool
    tensor_failure: Optional[Tuple[Fraction, str]]
    cotensor_failure: Optional[Tuple[Fraction, str]]
    join_failure: Optional[Tuple[str, ...]]
    sampled_weights: int
    sampled_without_colimit: int

    @property
    def consistent(self) -> bool:
        """Sampled colimit existence agrees with the verdict."""
        if self.cocomplete:
            return self.sampled_without_colimit == 0
        return self.sampled_without_colimit > 0

    def to_json(self) -> dict:
        return {
            "clause": "cocomplete iff tensored, cotensored and all joins exist",
            "tensored": self.tensored,
            "cotensored": self.cotensored,
            "all_joins": self.all_joins,
            "cocomplete": self.cocomplete,
            "tensor_failure": None if self.tensor_failure is None else [str(self.tensor_failure[0]), self.tensor_failure[1]],
            "cotensor_failure": None if self.cotensor_failure is None else [str(self.cotensor_failure[0]), self.cotensor_failure[1]],
            "join_failure": None if self.join_failure is None else list(self.join_failure),
            "sampled_weights": self.sampled_weights,
            "sampled_without_colimit": self.sampled_without_colimit,
        }


def completeness_report(X: EnrichedCat, rng: Optional[random.Random] = None, random_count: int = 20) -> CompletenessReport:
    ten, tcert = tensored(X)
    coten, ccert = cotensored(X)
    joins, jcert = all_joins(X)
    sample = sample_weights(X, rng, random_count)
    missing = sum(1 for w in sample if not colimit_class(w))
    return CompletenessReport(
        tensored=ten,
        cotensored=coten,
        all_joins=joins,
        cocomplete=ten and coten and joins,
        tensor_failure=tcert,
        cotensor_failure=ccert,
        join_failure=jcert,
        sampled_weights=len(sample),
        sampled_without_colimit=missing,
    )
