"""Nets with finitely presented tails and their limits."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .category import EnrichedCat, open_ball_converges, opposite, symmetrization
from .chain import (
    ChainCat,
    ChainIdeal,
    V,
    eval_chain_ideal,
    hom_limit,
    is_representable,
    make_chain_ideal,
)
from .errors import NotForwardCauchy, SchemaError
from .quantale import ONE, diagonal_limit, q
from .weights import IdealVerdict, Weight, colimit_class, is_ideal, representable


@dataclass(frozen=True)
class EventuallyConstant:
    point: int


@dataclass(frozen=True)
class EventuallyPeriodic:
    cycle: Tuple[int, ...]


@dataclass(frozen=True)
class ChainMonotone:
    """Strictly monotone tail converging to ``limit``; ``attained`` means eventually equal to it."""

    limit: Fraction
    direction: str
    attained: bool = False


Tail = Union[EventuallyConstant, EventuallyPeriodic, ChainMonotone]


@dataclass(frozen=True)
class Net:
    carrier: Union[EnrichedCat, ChainCat]
    prefix: Tuple
    tail: Tail

    @property
    def on_chain(self) -> bool:
        return isinstance(self.carrier, ChainCat)

    def tail_indices(self) -> Tuple[int, ...]:
        if isinstance(self.tail, EventuallyConstant):
            return (self.tail.point,)
        if isinstance(self.tail, EventuallyPeriodic):
            return self.tail.cycle
        raise TypeError("monotone chain tails have no finite index set")

    def to_json(self) -> dict:
        if self.on_chain:
            prefix = [str(p) for p in self.prefix]
            tail = self.tail
            t = {"kind": "chain_monotone", "limit": str(tail.limit), "direction": tail.direction, "attained": tail.attained}
            return {"carrier": self.carrier.to_json(), "prefix": prefix, "tail": t}
        els = self.carrier.elements
        prefix = [els[i] for i in self.prefix]
        if isinstance(self.tail, EventuallyConstant):
            t = {"kind": "eventually_constant", "point": els[self.tail.point]}
        else:
            t = {"kind": "eventually_periodic", "cycle": [els[i] for i in self.tail.cycle]}
        return {"carrier": self.carrier.to_json(), "prefix": prefix, "tail": t}


def make_net(carrier, prefix, tail) -> Net:
    """Build a net; ``tail`` is a Tail or its JSON dict."""
    if isinstance(tail, dict):
        tail = _tail_from_json(carrier, tail)
    prefix = tuple(prefix)
    if not prefix:
        raise SchemaError("net prefix must be nonempty")
    if isinstance(carrier, ChainCat):
        if not isinstance(tail, ChainMonotone):
            raise SchemaError("nets on a chain need a chain_monotone tail")
        if tail.direction not in ("up", "down"):
            raise SchemaError("direction must be 'up' or 'down'")
        L = q(tail.limit)
        if not 0 <= L <= 1:
            raise SchemaError("limit outside [0,1]")
        if not tail.attained and ((tail.direction == "up" and L == 0) or (tail.direction == "down" and L == 1)):
            raise SchemaError("no strictly monotone net reaches that limit from that side")
        prefix = tuple(q(p) for p in prefix)
        return Net(carrier, prefix, ChainMonotone(L, tail.direction, bool(tail.attained)))
    if isinstance(tail, ChainMonotone):
        raise SchemaError("chain_monotone tails need a chain carrier")
    prefix = tuple(carrier.index(p) for p in prefix)
    if isinstance(tail, EventuallyConstant):
        tail = EventuallyConstant(carrier.index(tail.point))
    else:
        if not tail.cycle:
            raise SchemaError("periodic tail needs a nonempty cycle")
        tail = EventuallyPeriodic(tuple(carrier.index(c) for c in tail.cycle))
    return Net(carrier, prefix, tail)


def _tail_from_json(carrier, data: dict) -> Tail:
    kind = data.get("kind")
    try:
        if kind == "eventually_constant":
            return EventuallyConstant(data["point"])
        if kind == "eventually_periodic":
            return EventuallyPeriodic(tuple(data["cycle"]))
        if kind == "chain_monotone":
            return ChainMonotone(q(data["limit"]), data["direction"], bool(data.get("attained", False)))
    except KeyError as exc:
        raise SchemaError(f"tail is missing {exc}") from exc
    raise SchemaError(f"unknown tail kind {kind!r}")


def net_from_json(data: dict) -> Net:
    from .category import EnrichedCat as _Cat
    from .quantale import TNorm

    try:
        car = data["carrier"]
        if "chain" in car:
            carrier = ChainCat(TNorm.from_json(car["tnorm"]), car["chain"])
        else:
            carrier = _Cat.from_json(car)
        return make_net(carrier, data["prefix"], data["tail"])
    except KeyError as exc:
        raise SchemaError(f"net JSON is missing {exc}") from exc


# -- classification -----------------------------------------------------------

def _forward_value(n: Net) -> Fraction:
    """``sup_i inf_{k>=j>=i} hom(x_j, x_k)``."""
    if n.on_chain:
        tail = n.tail
        if tail.attained:
            return ONE
        side = -1 if tail.direction == "up" else 1
        toward_top = (n.carrier.orientation == V) == (tail.direction == "up")
        # hom(x_j, x_k) is identically 1 along the net in that case
        return ONE if toward_top else diagonal_limit(n.carrier.tnorm, tail.limit, side)
    X, T = n.carrier, n.tail_indices()
    return min(X.hom[j][k] for j in T for k in T)


def _cauchy_value(n: Net) -> Fraction:
    if n.on_chain:
        tail = n.tail
        if tail.attained:
            return ONE
        side = -1 if tail.direction == "up" else 1
        return diagonal_limit(n.carrier.tnorm, tail.limit, side)
    X, T = n.carrier, n.tail_indices()
    return min(min(X.hom[j][k], X.hom[k][j]) for j in T for k in T)


def classify_net(n: Net) -> Tuple[bool, bool]:
    """``(forward_cauchy, cauchy)``."""
    return _forward_value(n) == ONE, _cauchy_value(n) == ONE


def opposite_net(n: Net) -> Net:
    if n.on_chain:
        return Net(n.carrier.opposite(), n.prefix, n.tail)
    return Net(opposite(n.carrier), n.prefix, n.tail)


def generated_weight(n: Net):
    """``sup_i inf_{j>=i} hom(-, x_j)``: a Weight, or a ChainIdeal on the chain."""
    if not classify_net(n)[0]:
        raise NotForwardCauchy("the net is not forward Cauchy")
    if n.on_chain:
        C, tail = n.carrier, n.tail
        if tail.attained:
            return make_chain_ideal(C, tail.limit, True)
        side = -1 if tail.direction == "up" else 1
        return make_chain_ideal(C, tail.limit, side != C.approach_side)
    X, T = n.carrier, n.tail_indices()
    return Weight(X, tuple(min(X.hom[y][t] for t in T) for y in range(X.size)))


def generated_coweight_values(n: Net):
    """``sup_i inf_{j>=i} hom(x_j, -)`` on a finite carrier."""
    X, T = n.carrier, n.tail_indices()
    return tuple(min(X.hom[t][y] for t in T) for y in range(X.size))


@dataclass(frozen=True)
class NetReport:
    forward_cauchy: bool
    cauchy: bool
    yoneda_limit: Optional[object]
    yoneda_limits: Tuple
    bilimit: Optional[object]
    sym_converges_to: Tuple
    bilimits: Tuple = ()

    def to_json(self) -> dict:
        s = lambda v: None if v is None else str(v)
        return {
            "forward_cauchy": self.forward_cauchy,
            "cauchy": self.cauchy,
            "yoneda_limit": s(self.yoneda_limit),
            "yoneda_limits": [str(v) for v in self.yoneda_limits],
            "bilimit": s(self.bilimit),
            "bilimits": [str(v) for v in self.bilimits],
            "sym_converges_to": [str(v) for v in self.sym_converges_to],
        }


def net_limits(n: Net) -> NetReport:
    fwd, cau = classify_net(n)
    if not fwd:
        raise NotForwardCauchy("the net is not forward Cauchy")
    if n.on_chain:
        return _chain_limits(n, cau)
    X = n.carrier
    phi = generated_weight(n)
    cls = colimit_class(phi)
    psi = generated_coweight_values(n)
    bilimits = [
        a for a in range(X.size)
        if phi.values == tuple(X.hom[x][a] for x in range(X.size)) and psi == X.hom[a]
    ]
    S = symmetrization(X)
    sym = tuple(X.elements[x] for x in range(X.size) if open_ball_converges(S, n, x))
    return NetReport(
        fwd,
        cau,
        X.elements[cls[0]] if cls else None,
        tuple(X.elements[i] for i in cls),
        X.elements[bilimits[0]] if bilimits else None,
        sym,
        tuple(X.elements[i] for i in bilimits),
    )


def _chain_limits(n: Net, cau: bool) -> NetReport:
    C, tail = n.carrier, n.tail
    L = tail.limit
    if tail.attained:
        return NetReport(True, True, L, (L,), L, (L,), (L,))
    side = -1 if tail.direction == "up" else 1
    # both one-sided limits at the limit point itself decide the bilimit;
    # away from it the residuation is continuous and matches hom(-, L), hom(L, -)
    lower = hom_limit(C, L, L, "y", side)
    upper = hom_limit(C, L, L, "x", side)
    bil = L if lower == ONE and upper == ONE else None
    sym = (L,) if min(lower, upper) == ONE else ()
    return NetReport(True, cau, L, (L,), bil, sym, () if bil is None else (L,))


def net_from_ideal(phi: Weight, verdict: Optional[IdealVerdict] = None) -> Net:
    """A net generating the ideal ``phi``, read off its directed set of formal balls.

    Pairwise dominating centres are folded into one centre dominating the
    whole support; the constant net there generates ``phi``.
    """
    verdict = verdict or is_ideal(phi)
    if not verdict:
        raise SchemaError("weight is not an ideal")
    X = phi.base
    support = [x for x in range(X.size) if phi.values[x] > 0]
    from .weights import ball_dominates

    z = support[0]
    for x in support[1:]:
        for w in range(X.size):
            if ball_dominates(phi, z, w) and ball_dominates(phi, x, w):
                z = w
                break
        else:
            raise SchemaError("formal balls are not directed")
    net = Net(X, (z,), EventuallyConstant(z))
    if generated_weight(net) != phi:
        raise SchemaError("the dominating centre does not regenerate the ideal")
    return net


def chain_weight_values(n: Net, points):
    """Pointwise values of the generated weight on a chain, for comparison with grids."""
    I = generated_weight(n)
    return [eval_chain_ideal(n.carrier, I, p) for p in points]
