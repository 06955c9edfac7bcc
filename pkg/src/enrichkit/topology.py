"""Real-valued topologies ``delta(x, A)`` on finite sets, the space K, and sobriety."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .category import EnrichedCat, is_separated, isomorphic_pair, validate_category
from .chain import V_OP, ChainCat, ChainIdeal, candidate_points, chain_verdict, non_attained_limits
from .errors import SchemaError
from .quantale import ONE, ZERO, TNorm, q, residuate, residuate_limit, tnorm_apply
from .weights import Weight, is_ideal, representing_elements, sample_weights, weight_violation

Subset = FrozenSet[int]


def all_subsets(n: int) -> List[Subset]:
    return [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]


@dataclass(frozen=True, eq=False)
class RVSpace:
    """``delta[A][x] = delta(x, A)`` for every subset ``A`` of the carrier."""

    tnorm: TNorm
    elements: Tuple[str, ...]
    delta: Dict[Subset, Tuple[Fraction, ...]]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __call__(self, x: int, A: Iterable[int]) -> Fraction:
        return self.delta[frozenset(A)][x]

    def __eq__(self, other):
        if not isinstance(other, RVSpace):
            return NotImplemented
        return (self.tnorm, self.elements, self.delta) == (other.tnorm, other.elements, other.delta)

    def __hash__(self):
        return hash((self.tnorm, self.elements))

    def to_json(self) -> dict:
        triples = [
            [x, sorted(A), str(v)]
            for A in sorted(self.delta, key=lambda s: (len(s), sorted(s)))
            for x, v in enumerate(self.delta[A])
        ]
        return {"tnorm": self.tnorm.to_json(), "elements": list(self.elements), "delta": triples}

    @classmethod
    def from_json(cls, data: dict) -> "RVSpace":
        try:
            tnorm = TNorm.from_json(data["tnorm"])
            elements = tuple(data["elements"])
            triples = data["delta"]
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"space JSON is missing {exc}") from exc
        n = len(elements)
        rows: Dict[Subset, list] = {A: [None] * n for A in all_subsets(n)}
        for x, A, v in triples:
            rows[frozenset(A)][x] = q(v)
        for A, row in rows.items():
            if any(v is None for v in row):
                raise SchemaError(f"delta table incomplete at subset {sorted(A)}")
        return cls(tnorm, elements, {A: tuple(r) for A, r in rows.items()})


def make_space(tnorm: TNorm, elements, rule) -> RVSpace:
    """Tabulate ``rule(x, A)`` over every point and subset."""
    n = len(elements)
    delta = {A: tuple(q(rule(x, A)) for x in range(n)) for A in all_subsets(n)}
    return RVSpace(tnorm, tuple(elements), delta)


@dataclass(frozen=True)
class RVTopVerdict:
    valid: bool
    axiom: Optional[str] = None
    args: Tuple = ()

    def __bool__(self):
        return self.valid


def validate_rvtop(space: RVSpace) -> RVTopVerdict:
    n, d, t = space.size, space.delta, space.tnorm
    subsets = all_subsets(n)
    for x in range(n):
        if d[frozenset([x])][x] != ONE:
            return RVTopVerdict(False, "A1", (x,))
        if d[frozenset()][x] != ZERO:
            return RVTopVerdict(False, "A2", (x,))
    for A in subsets:
        for B in subsets:
            U = A | B
            for x in range(n):
                if d[U][x] != max(d[A][x], d[B][x]):
                    return RVTopVerdict(False, "A3", (x, tuple(sorted(A)), tuple(sorted(B))))
    for A in subsets:
        col = d[A]
        for B in subsets:
            if not B:
                continue
            low = min(col[b] for b in B)
            for x in range(n):
                if tnorm_apply(t, low, d[B][x]) > col[x]:
                    return RVTopVerdict(False, "A4", (x, tuple(sorted(A)), tuple(sorted(B))))
    return RVTopVerdict(True)


def is_closed_set(space: RVSpace, lam: Sequence) -> bool:
    """Whether ``lam`` is continuous into K: ``delta(x, A) <= inf lam(A) -> lam(x)``."""
    lam = [q(v) for v in lam]
    t = space.tnorm
    for A, row in space.delta.items():
        if not A:
            continue
        low = min(lam[a] for a in A)
        for x in range(space.size):
            if row[x] > residuate(t, low, lam[x]):
                return False
    return True


# -- Alexandroff spaces and specialization --------------------------------------

def gamma(X: EnrichedCat) -> RVSpace:
    return make_space(X.tnorm, X.elements, lambda x, A: max((X.hom[x][y] for y in A), default=ZERO))


def omega_specialization(space: RVSpace) -> EnrichedCat:
    n = space.size
    hom = [[space.delta[frozenset([y])][x] for y in range(n)] for x in range(n)]
    return validate_category(space.tnorm, space.elements, hom)


# -- finite topological spaces ---------------------------------------------------

@dataclass(frozen=True)
class FiniteTopology:
    elements: Tuple[str, ...]
    opens: FrozenSet[Subset]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def closed_sets(self) -> FrozenSet[Subset]:
        full = frozenset(range(self.size))
        return frozenset(full - U for U in self.opens)

    def closure(self, A: Iterable[int]) -> Subset:
        A = frozenset(A)
        full = frozenset(range(self.size))
        out = full
        for C in self.closed_sets:
            if A <= C:
                out &= C
        return out

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "opens": sorted(sorted(U) for U in self.opens),
        }


def topology_from_base(elements, base: Iterable[Subset]) -> FiniteTopology:
    """Topology generated by ``base`` as a subbase: finite intersections, then unions."""
    n = len(tuple(elements))
    opens = {frozenset(), frozenset(range(n))} | {frozenset(b) for b in base}
    changed = True
    while changed:
        changed = False
        for U in list(opens):
            for W in list(opens):
                for C in (U | W, U & W):
                    if C not in opens:
                        opens.add(C)
                        changed = True
    return FiniteTopology(tuple(elements), frozenset(opens))


def is_topology(T: FiniteTopology) -> bool:
    full = frozenset(range(T.size))
    if frozenset() not in T.opens or full not in T.opens:
        return False
    return all(U | W in T.opens and U & W in T.opens for U in T.opens for W in T.opens)


def omega_of_topology(tnorm: TNorm, T: FiniteTopology) -> RVSpace:
    """Two-valued ``delta``: 1 on the closure of ``A``, 0 elsewhere."""
    return make_space(tnorm, T.elements, lambda x, A: ONE if x in T.closure(A) else ZERO)


def open_ball_topology(X: EnrichedCat) -> FiniteTopology:
    """Generated by the balls ``B(x, r) = {y : X(x, y) > r}``, ``r < 1``.

    On a finite carrier a ball only changes when ``r`` crosses a hom-value.
    """
    radii = sorted({v for row in X.hom for v in row if v < 1} | {ZERO})
    base = []
    for x in range(X.size):
        for r in radii:
            base.append(frozenset(y for y in range(X.size) if X.hom[x][y] > r))
    # U is open iff every point has a ball inside U; unions of balls are exactly these
    opens = set()
    for U in all_subsets(X.size):
        if all(any(x in B and B <= U for B in base if x in B) for x in U):
            opens.add(U)
    return FiniteTopology(X.elements, frozenset(opens))


def topological_reflections(space: RVSpace) -> Tuple[FiniteTopology, FiniteTopology]:
    """``(iota, rho)``: the topological coreflection and reflection.

    A crisp set is iota-closed iff it is the 1-level set of some closed set;
    the closure ``delta(-, A)`` is the least closed set taking value 1 on ``A``,
    so this happens iff its 1-level set is ``A`` itself.  A crisp set is
    rho-closed iff its indicator is a closed set.
    """
    n = space.size
    full = frozenset(range(n))
    iota_closed, rho_closed = [], []
    for A in all_subsets(n):
        col = space.delta[A]
        if frozenset(x for x in range(n) if col[x] == ONE) == A:
            iota_closed.append(A)
        if all(col[x] == ZERO for x in range(n) if x not in A):
            rho_closed.append(A)
    iota = FiniteTopology(space.elements, frozenset(full - C for C in iota_closed))
    rho = FiniteTopology(space.elements, frozenset(full - C for C in rho_closed))
    return iota, rho


def closure_level_sets(space: RVSpace, generators: Sequence[Sequence[Fraction]]) -> FrozenSet[Subset]:
    """1-level sets of the generators, closed under finite unions and intersections."""
    n = space.size
    sets = {frozenset(x for x in range(n) if g[x] == ONE) for g in generators}
    sets |= {frozenset(), frozenset(range(n))}
    changed = True
    while changed:
        changed = False
        for A in list(sets):
            for B in list(sets):
                for C in (A | B, A & B):
                    if C not in sets:
                        sets.add(C)
                        changed = True
    return frozenset(sets)


def iota_from_ball_weights(X: EnrichedCat) -> FiniteTopology:
    """Coreflection of the Alexandroff space built from the weights ``X(x,-) -> r``."""
    radii = sorted({v for row in X.hom for v in row} | {ZERO, ONE})
    gens = [
        tuple(residuate(X.tnorm, X.hom[x][z], r) for z in range(X.size))
        for x in range(X.size)
        for r in radii
    ]
    closed = closure_level_sets(gamma(X), gens)
    full = frozenset(range(X.size))
    return FiniteTopology(X.elements, frozenset(full - C for C in closed))


# -- Scott closed sets -------------------------------------------------------------

def is_scott_closed(X: EnrichedCat, lam: Sequence, ideals: Optional[Sequence[Weight]] = None) -> bool:
    """``sub(phi, lam) <= lam(colim phi)`` for every ideal with a colimit.

    ``lam`` must be a weight.  The ideals default to the representables plus
    every sampled weight that passes the ideal test.
    """
    from .weights import colimit_class, representable, sub

    lam_w = Weight(X, tuple(q(v) for v in lam))
    if weight_violation(X, lam_w.values) is not None:
        raise SchemaError("lam is not a weight")
    if ideals is None:
        ideals = [representable(X, a) for a in range(X.size)]
        ideals += [w for w in sample_weights(X) if is_ideal(w)]
    for phi in ideals:
        for c in colimit_class(phi):
            if sub(phi, lam_w) > lam_w.values[c]:
                return False
    return True


# -- maps on [0,1] ---------------------------------------------------------------

@dataclass(frozen=True)
class PiecewiseMap:
    """A map on [0,1]: exact values at ``cuts`` and ``slope*x + intercept`` on each open gap."""

    cuts: Tuple[Fraction, ...]
    point_values: Tuple[Fraction, ...]
    pieces: Tuple[Tuple[Fraction, Fraction], ...]

    def _gap(self, x: Fraction) -> int:
        for i in range(len(self.cuts) - 1):
            if self.cuts[i] < x < self.cuts[i + 1]:
                return i
        raise ValueError(f"{x} is a cut point")

    def __call__(self, x) -> Fraction:
        x = q(x)
        if x in self.cuts:
            return self.point_values[self.cuts.index(x)]
        a, b = self.pieces[self._gap(x)]
        return a * x + b

    def right_limit(self, x) -> Fraction:
        x = q(x)
        if x in self.cuts:
            i = self.cuts.index(x)
            a, b = self.pieces[i]
        else:
            a, b = self.pieces[self._gap(x)]
        return a * x + b

    def left_limit(self, x) -> Fraction:
        x = q(x)
        if x in self.cuts:
            i = self.cuts.index(x)
            a, b = self.pieces[i - 1]
        else:
            a, b = self.pieces[self._gap(x)]
        return a * x + b


def make_piecewise(cuts, point_values, pieces) -> PiecewiseMap:
    cuts = tuple(q(c) for c in cuts)
    if cuts[0] != 0 or cuts[-1] != 1 or list(cuts) != sorted(set(cuts)):
        raise SchemaError("cuts must increase from 0 to 1")
    if len(point_values) != len(cuts) or len(pieces) != len(cuts) - 1:
        raise SchemaError("need one value per cut and one piece per gap")
    return PiecewiseMap(cuts, tuple(q(v) for v in point_values), tuple((q(a), q(b)) for a, b in pieces))


def step_map(jumps, values, closed_right: bool = True) -> PiecewiseMap:
    """Step function: ``values[i]`` between ``jumps[i-1]`` and ``jumps[i]``.

    At a jump the function takes the value on its right (right continuous)
    when ``closed_right`` and the value on its left otherwise.
    """
    jumps = [q(j) for j in jumps]
    cuts = [ZERO] + [j for j in jumps if 0 < j < 1] + [ONE]
    vals = [q(v) for v in values]
    pieces = [(ZERO, vals[i]) for i in range(len(cuts) - 1)]
    point_values = []
    for i, c in enumerate(cuts):
        if i == 0:
            point_values.append(vals[0])
        elif i == len(cuts) - 1:
            point_values.append(vals[-1])
        else:
            point_values.append(vals[i] if closed_right else vals[i - 1])
    return make_piecewise(cuts, point_values, pieces)


def map_candidates(t: TNorm, f: PiecewiseMap) -> List[Fraction]:
    return candidate_points(t, f.cuts)


def is_right_continuous(f: PiecewiseMap) -> bool:
    return all(f(c) == f.right_limit(c) for c in f.cuts[:-1])


def is_weight_of_vop(t: TNorm, f: PiecewiseMap) -> bool:
    """``f(y) & (y -> x) <= f(x)`` at candidate points and along ``y -> x+``."""
    pts = map_candidates(t, f)
    for x in pts:
        for y in pts:
            if tnorm_apply(t, f(y), residuate(t, y, x)) > f(x):
                return False
    for x in pts[:-1]:
        # y decreasing to x
        if tnorm_apply(t, f.right_limit(x), residuate_limit(t, x, x, "x", 1)) > f(x):
            return False
    return True


def is_closed_in_K(t: TNorm, f: PiecewiseMap) -> bool:
    """Closed sets of K: maps with ``y -> x <= f(y) -> f(x)`` that are right continuous."""
    return is_weight_of_vop(t, f) and is_right_continuous(f)


def scott_sub_chain(C: ChainCat, I: ChainIdeal, f: PiecewiseMap) -> Fraction:
    """``sub(I, f)`` for an ideal of ``V_op`` and a weight ``f``.

    The ideal is generated by a net ``x_j`` decreasing to ``L`` (or constant),
    and ``sub`` against a Yoneda limit of representables is the limit of
    ``f(x_j)``.
    """
    if C.orientation != V_OP:
        raise SchemaError("Scott closedness on the chain is implemented for V_op")
    if I.attained:
        return f(I.limit)
    return f.right_limit(I.limit)


def is_scott_closed_chain(C: ChainCat, f: PiecewiseMap) -> Tuple[bool, Optional[Fraction]]:
    """Scott closedness of a weight of ``V_op``; returns the failing limit if any."""
    if not is_weight_of_vop(C.tnorm, f):
        return False, None
    for L in non_attained_limits(C, f.cuts):
        if scott_sub_chain(C, ChainIdeal(L, False), f) > f(L):
            return False, L
    return True, None


# -- sobriety ---------------------------------------------------------------------

@dataclass(frozen=True)
class SoberVerdict:
    sober: bool
    isomorphic_pair: Optional[Tuple[str, str]] = None
    non_representable_ideal: Optional[object] = None
    ideals_checked: int = 0

    def __bool__(self):
        return self.sober

    def to_json(self) -> dict:
        w = self.non_representable_ideal
        if w is not None and hasattr(w, "values"):
            w = [str(v) for v in w.values]
        elif w is not None:
            w = w.to_json()
        return {
            "sober": self.sober,
            "isomorphic_pair": None if self.isomorphic_pair is None else list(self.isomorphic_pair),
            "non_representable_ideal": w,
            "ideals_checked": self.ideals_checked,
        }


def sober_alexandroff(X) -> SoberVerdict:
    """Sobriety of ``Gamma(X)``: separated and every ideal representable."""
    if isinstance(X, ChainCat):
        v = chain_verdict(X)
        return SoberVerdict(v.smyth_complete, None, v.certificate, 0)
    pair = isomorphic_pair(X)
    if pair is not None:
        return SoberVerdict(False, pair)
    ideals = [w for w in sample_weights(X) if is_ideal(w)]
    for w in ideals:
        if not representing_elements(w):
            return SoberVerdict(False, None, w, len(ideals))
    return SoberVerdict(True, None, None, len(ideals))


def irreducible_closed_sets(T: FiniteTopology) -> List[Subset]:
    closed = T.closed_sets
    out = []
    for C in closed:
        if not C:
            continue
        if not any(A != C and B != C and A | B == C for A in closed for B in closed if A <= C and B <= C):
            out.append(C)
    return out


def is_sober_topology(T: FiniteTopology) -> bool:
    """Every irreducible closed set is the closure of exactly one point."""
    for C in irreducible_closed_sets(T):
        if sum(1 for x in range(T.size) if T.closure([x]) == C) != 1:
            return False
    return True


def rv_sobriety_refutation(space: RVSpace, values: Sequence = (ZERO, Fraction(1, 2), ONE), radii=None):
    """Search closed sets with the given values for an irreducible one that is not a unique point closure.

    Irreducibility is tested against the closed sets of the same finite
    family and the given radii only, so a returned witness is a refutation
    relative to that family; ``None`` means no refutation was found.
    """
    from .weights import ONE as _ONE

    t = space.tnorm
    n = space.size
    values = [q(v) for v in values]
    radii = [q(r) for r in (radii if radii is not None else values)]
    family = [vec for vec in itertools.product(values, repeat=n) if is_closed_set(space, vec)]
    point_closures = [tuple(space.delta[frozenset([x])][y] for y in range(n)) for x in range(n)]

    def subv(a, b):
        return min((residuate(t, u, v) for u, v in zip(a, b)), default=_ONE)

    for phi in family:
        if max(phi) != ONE:
            continue
        irreducible = True
        for lam in family:
            s_lam = subv(phi, lam)
            for r in radii:
                scaled = tuple(tnorm_apply(t, r, v) for v in lam)
                if subv(phi, scaled) != tnorm_apply(t, r, s_lam):
                    irreducible = False
                    break
            if not irreducible:
                break
            for mu in family:
                joined = tuple(max(u, v) for u, v in zip(lam, mu))
                if subv(phi, joined) != max(s_lam, subv(phi, mu)):
                    irreducible = False
                    break
            if not irreducible:
                break
        if irreducible and point_closures.count(tuple(phi)) != 1:
            return phi
    return None
