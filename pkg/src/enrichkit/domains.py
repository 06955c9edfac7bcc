"""Way-below distributor, continuity, compactness, and completeness verdicts."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .category import EnrichedCat, is_separated, isomorphic_pair
from .chain import ChainCat, chain_compact_check, chain_verdict, candidate_points
from .distributors import Distributor, compose
from .quantale import ONE, residuate
from .weights import (
    Weight,
    colimit_class,
    is_cauchy_weight,
    is_ideal,
    representable,
    representing_elements,
    sample_weights,
    sub,
)


def ideal_family(X: EnrichedCat, rng: Optional[random.Random] = None, random_count: int = 20) -> List[Weight]:
    """Representables plus every sampled weight that passes the ideal test."""
    reps = [representable(X, a) for a in range(X.size)]
    seen = {w.values for w in reps}
    out = list(reps)
    for w in sample_weights(X, rng, random_count):
        if w.values not in seen and is_ideal(w):
            seen.add(w.values)
            out.append(w)
    return out


@dataclass(frozen=True)
class WayBelow:
    base: EnrichedCat
    table: Tuple[Tuple[Fraction, ...], ...]

    def __call__(self, y, x) -> Fraction:
        return self.table[self.base.index(y)][self.base.index(x)]

    def as_distributor(self) -> Distributor:
        return Distributor(self.base, self.base, self.table)


def way_below(X: EnrichedCat, ideals: Optional[List[Weight]] = None) -> WayBelow:
    """``w(y, x) = inf over ideals phi with a colimit of X(x, colim phi) -> phi(y)``."""
    if ideals is None:
        ideals = [representable(X, a) for a in range(X.size)]
    pairs = []
    for phi in ideals:
        cls = colimit_class(phi)
        if cls:
            pairs.append((phi, cls[0]))
    t = X.tnorm
    table = tuple(
        tuple(
            min((residuate(t, X.hom[x][c], phi.values[y]) for phi, c in pairs), default=ONE)
            for x in range(X.size)
        )
        for y in range(X.size)
    )
    return WayBelow(X, table)


@dataclass(frozen=True)
class ContinuityReport:
    continuous: bool
    interpolation: Optional[bool]
    compact: Tuple
    algebraic: bool

    def to_json(self) -> dict:
        return {
            "continuous": self.continuous,
            "interpolation": self.interpolation,
            "compact": [str(c) for c in self.compact],
            "algebraic": self.algebraic,
        }


def continuity_report(X, ideals: Optional[List[Weight]] = None) -> ContinuityReport:
    if isinstance(X, ChainCat):
        v = chain_verdict(X)
        compact = tuple(p for p in candidate_points(X.tnorm) if chain_compact_check(X, p))
        return ContinuityReport(v.continuous, None, compact, v.algebraic)
    if ideals is None:
        ideals = ideal_family(X)
    wb = way_below(X, ideals)
    # continuous: each w(-, x) is an ideal with x as a colimit
    continuous = True
    for x in range(X.size):
        col = Weight(X, tuple(wb.table[y][x] for y in range(X.size)))
        if weight_ok(col) and is_ideal(col) and x in colimit_class(col):
            continue
        continuous = False
        break
    d = wb.as_distributor()
    interpolation = compose(d, d).table == wb.table
    compact = tuple(
        X.elements[a] for a in range(X.size)
        if all(wb.table[y][a] == X.hom[y][a] for y in range(X.size))
    )
    algebraic = _finite_algebraic(X, ideals, {X.index(c) for c in compact})
    return ContinuityReport(continuous, interpolation, compact, algebraic)


def weight_ok(w: Weight) -> bool:
    from .weights import weight_violation

    return weight_violation(w.base, w.values) is None


def _finite_algebraic(X: EnrichedCat, ideals: List[Weight], compact: set) -> bool:
    """Yoneda complete on the family and each point a colimit of an ideal supported on compacts."""
    for phi in ideals:
        if not colimit_class(phi):
            return False
    for x in range(X.size):
        if x in compact:
            continue
        found = False
        for phi in ideals:
            if all(phi.values[y] == 0 or y in compact for y in range(X.size)) and x in colimit_class(phi):
                found = True
                break
        if not found:
            return False
    return True


# -- Cauchy completion ---------------------------------------------------------------

@dataclass(frozen=True)
class CauchyCompletion:
    """Cauchy weights up to equality, with the hom ``sub``, and the two Yoneda distributors."""

    base: EnrichedCat
    weights: Tuple[Weight, ...]
    category: EnrichedCat
    lower: Distributor
    upper: Distributor

    def yoneda_equations(self) -> Tuple[bool, bool]:
        """``y_* . y^* = CX`` and ``y^* . y_* = X``."""
        first = compose(self.lower, self.upper).table == self.category.hom
        second = compose(self.upper, self.lower).table == self.base.hom
        return first, second


def cauchy_completion(X: EnrichedCat, rng: Optional[random.Random] = None) -> CauchyCompletion:
    """Collect Cauchy weights among the sampled ones (they are all representable on finite carriers)."""
    found: Dict[tuple, Weight] = {}
    for w in [representable(X, a) for a in range(X.size)] + sample_weights(X, rng):
        if w.values not in found and is_cauchy_weight(w):
            found[w.values] = w
    ws = tuple(found.values())
    labels = []
    for w in ws:
        reps = representing_elements(w)
        labels.append("y(%s)" % X.elements[reps[0]] if reps else "phi%d" % len(labels))
    hom = tuple(tuple(sub(a, b) for b in ws) for a in ws)
    CX = EnrichedCat(X.tnorm, tuple(labels), hom)
    lower = Distributor(X, CX, tuple(tuple(w.values[x] for w in ws) for x in range(X.size)))
    upper = Distributor(CX, X, tuple(tuple(sub(w, representable(X, x)) for x in range(X.size)) for w in ws))
    return CauchyCompletion(X, ws, CX, lower, upper)


# -- completeness verdicts --------------------------------------------------------------

@dataclass(frozen=True)
class CompletenessVerdict:
    separated: bool
    cauchy_complete: bool
    yoneda_complete: bool
    smyth_complete: bool
    smyth_completable: bool
    certificates: Dict[str, object] = field(default_factory=dict)
    sample: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "separated": self.separated,
            "cauchy_complete": self.cauchy_complete,
            "yoneda_complete": self.yoneda_complete,
            "smyth_complete": self.smyth_complete,
            "smyth_completable": self.smyth_completable,
            "certificates": {k: _cert_json(v) for k, v in sorted(self.certificates.items())},
            "sample": dict(sorted(self.sample.items())),
        }


def _cert_json(v):
    if v is None:
        return None
    if isinstance(v, Weight):
        return {"weight": [str(x) for x in v.values]}
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, tuple):
        return list(v)
    return v


def smyth_report(X, rng: Optional[random.Random] = None, random_count: int = 20) -> CompletenessVerdict:
    if isinstance(X, ChainCat):
        v = chain_verdict(X)
        cert = {}
        if v.certificate is not None:
            cert["non_representable_ideal"] = v.certificate
        return CompletenessVerdict(
            separated=True,
            cauchy_complete=True,
            yoneda_complete=True,
            smyth_complete=v.smyth_complete,
            smyth_completable=v.smyth_completable,
            certificates=cert,
            sample={"family": "closed-form ideal shapes", "exact": True},
        )
    separated = is_separated(X)
    weights = sample_weights(X, rng, random_count)
    ideals = ideal_family(X, random.Random(0) if rng is None else rng, random_count)
    certs: Dict[str, object] = {}
    pair = isomorphic_pair(X)
    if pair is not None:
        certs["isomorphic_pair"] = pair
    non_rep = next((w for w in ideals if not representing_elements(w)), None)
    if non_rep is not None:
        certs["non_representable_ideal"] = non_rep
    no_colim = next((w for w in ideals if not colimit_class(w)), None)
    if no_colim is not None:
        certs["ideal_without_colimit"] = no_colim
    non_cauchy = next((w for w in ideals if not is_cauchy_weight(w)), None)
    if non_cauchy is not None:
        certs["non_cauchy_ideal"] = non_cauchy
    cauchy_ws = [w for w in weights if is_cauchy_weight(w)]
    non_rep_cauchy = next((w for w in cauchy_ws if not representing_elements(w)), None)
    if non_rep_cauchy is not None:
        certs["non_representable_cauchy_weight"] = non_rep_cauchy
    return CompletenessVerdict(
        separated=separated,
        cauchy_complete=separated and non_rep_cauchy is None,
        yoneda_complete=separated and no_colim is None,
        smyth_complete=separated and non_rep is None,
        smyth_completable=non_cauchy is None,
        certificates=certs,
        sample={
            "family": "representables, joins, tensors, cotensors, repaired random weights",
            "weights": len(weights),
            "ideals": len(ideals),
            "exact": False,
        },
    )
