"""Finite real-enriched categories stored as square tables of hom-values."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import AxiomViolation, SchemaError
from .quantale import ONE, TNorm, q, residuate, tnorm_apply


@dataclass(frozen=True)
class Violation:
    axiom: str
    args: Tuple[str, ...]
    detail: str

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "args": list(self.args), "detail": self.detail}


@dataclass(frozen=True, eq=False)
class EnrichedCat:
    """``hom[i][j]`` is ``X(elements[i], elements[j])``.

    Construct through :func:`validate_category` unless the table is known to
    satisfy the axioms.  Equality compares t-norm, labels and table.
    """

    tnorm: TNorm
    elements: Tuple[str, ...]
    hom: Tuple[Tuple[Fraction, ...], ...]
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    def __eq__(self, other):
        if not isinstance(other, EnrichedCat):
            return NotImplemented
        return (self.tnorm, self.elements, self.hom) == (other.tnorm, other.elements, other.hom)

    def __hash__(self):
        return hash((self.tnorm, self.elements, self.hom))

    def __len__(self):
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, label) -> int:
        if isinstance(label, int) and not isinstance(label, bool):
            if 0 <= label < self.size:
                return label
            raise SchemaError(f"index {label} out of range")
        try:
            return self._index[label]
        except KeyError:
            raise SchemaError(f"{label!r} is not an element of the category") from None

    def __call__(self, x, y) -> Fraction:
        return self.hom[self.index(x)][self.index(y)]

    def mul(self, a, b) -> Fraction:
        return tnorm_apply(self.tnorm, a, b)

    def imp(self, a, b) -> Fraction:
        return residuate(self.tnorm, a, b)

    def isomorphic(self, i: int, j: int) -> bool:
        return self.hom[i][j] == ONE and self.hom[j][i] == ONE

    def iso_class(self, i: int) -> Tuple[int, ...]:
        return tuple(j for j in range(self.size) if self.isomorphic(i, j))

    def iso_classes(self) -> list[Tuple[int, ...]]:
        seen, out = set(), []
        for i in range(self.size):
            if i not in seen:
                cls = self.iso_class(i)
                seen.update(cls)
                out.append(cls)
        return out

    def to_json(self) -> dict:
        return {
            "tnorm": self.tnorm.to_json(),
            "elements": list(self.elements),
            "hom": [[str(v) for v in row] for row in self.hom],
        }

    @classmethod
    def from_json(cls, data: dict) -> "EnrichedCat":
        try:
            tnorm = TNorm.from_json(data["tnorm"])
            elements = data["elements"]
            hom = data["hom"]
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"category JSON is missing {exc}") from exc
        return validate_category(tnorm, elements, hom)


def _coerce_table(elements, hom) -> Tuple[Tuple[str, ...], Tuple[Tuple[Fraction, ...], ...]]:
    elements = tuple(str(e) for e in elements)
    if len(set(elements)) != len(elements):
        raise SchemaError("element labels must be distinct")
    n = len(elements)
    if len(hom) != n or any(len(row) != n for row in hom):
        raise SchemaError(f"hom table must be {n}x{n}")
    try:
        table = tuple(tuple(q(v) for v in row) for row in hom)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad hom value: {exc}") from exc
    for row in table:
        for v in row:
            if not 0 <= v <= 1:
                raise SchemaError(f"hom value {v} outside [0,1]")
    return elements, table


def find_violation(tnorm: TNorm, elements: Sequence[str], hom) -> Optional[Violation]:
    """First failure of reflexivity or &-transitivity, or None."""
    n = len(elements)
    for i in range(n):
        if hom[i][i] != ONE:
            return Violation("reflexivity", (elements[i],), f"X({elements[i]},{elements[i]}) = {hom[i][i]} != 1")
    for i in range(n):
        for j in range(n):
            hij = hom[i][j]
            for k in range(n):
                lhs = tnorm_apply(tnorm, hom[j][k], hij)
                if lhs > hom[i][k]:
                    x, y, z = elements[i], elements[j], elements[k]
                    return Violation(
                        "transitivity",
                        (x, y, z),
                        f"X({y},{z}) & X({x},{y}) = {lhs} > X({x},{z}) = {hom[i][k]}",
                    )
    return None


def validate_category(tnorm: TNorm, elements, hom) -> EnrichedCat:
    """Return the category or raise :class:`AxiomViolation` with a witness."""
    elements, table = _coerce_table(elements, hom)
    bad = find_violation(tnorm, elements, table)
    if bad is not None:
        raise AxiomViolation(f"not a real-enriched category: {bad.detail}", bad)
    return EnrichedCat(tnorm, elements, table)


def discrete(tnorm: TNorm, elements) -> EnrichedCat:
    n = len(elements)
    hom = [[ONE if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return validate_category(tnorm, elements, hom)


def terminal(tnorm: TNorm) -> EnrichedCat:
    return EnrichedCat(tnorm, ("*",), ((ONE,),))


def opposite(X: EnrichedCat) -> EnrichedCat:
    n = X.size
    return EnrichedCat(X.tnorm, X.elements, tuple(tuple(X.hom[j][i] for j in range(n)) for i in range(n)))


def symmetrization(X: EnrichedCat) -> EnrichedCat:
    n = X.size
    return EnrichedCat(
        X.tnorm,
        X.elements,
        tuple(tuple(min(X.hom[i][j], X.hom[j][i]) for j in range(n)) for i in range(n)),
    )


def underlying_order(X: EnrichedCat) -> Tuple[Tuple[bool, ...], ...]:
    return tuple(tuple(v == ONE for v in row) for row in X.hom)


def is_separated(X: EnrichedCat) -> bool:
    return all(len(c) == 1 for c in X.iso_classes())


def isomorphic_pair(X: EnrichedCat) -> Optional[Tuple[str, str]]:
    for cls in X.iso_classes():
        if len(cls) > 1:
            return X.elements[cls[0]], X.elements[cls[1]]
    return None


@dataclass(frozen=True)
class CatViews:
    opposite: EnrichedCat
    symmetrization: EnrichedCat
    underlying_order: Tuple[Tuple[bool, ...], ...]
    separated: bool


def derive_views(X: EnrichedCat) -> CatViews:
    return CatViews(opposite(X), symmetrization(X), underlying_order(X), is_separated(X))


def open_ball_converges(X: EnrichedCat, net, x) -> bool:
    """Whether ``sup_i inf_{j>=i} X(x, x_j) = 1`` for a net over ``X``.

    On a finite carrier the eventual tail of a finitely presented net is a
    fixed set of indices, so the sup-inf is the minimum over that set.
    """
    i = X.index(x)
    return min(X.hom[i][j] for j in net.tail_indices()) == ONE


def transitive_closure(tnorm: TNorm, hom) -> list:
    """Least table above ``hom`` (with 1 on the diagonal) satisfying &-transitivity."""
    n = len(hom)
    t = [[ONE if i == j else q(hom[i][j]) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                v = tnorm_apply(tnorm, t[k][j], t[i][k])
                if v > t[i][j]:
                    t[i][j] = v
    return t


def random_category(tnorm: TNorm, n: int, rng, pool: Optional[Sequence[Fraction]] = None, p_one: float = 0.15) -> EnrichedCat:
    """Random category on ``n`` points: random values closed under transitivity."""
    if pool is None:
        pool = sorted({Fraction(k, d) for d in (2, 3, 4, 5, 8) for k in range(d + 1)} | set(tnorm.breakpoints()))
    raw = [[ONE if rng.random() < p_one else rng.choice(pool) for _ in range(n)] for _ in range(n)]
    hom = transitive_closure(tnorm, raw)
    return EnrichedCat(tnorm, tuple("x%d" % i for i in range(n)), tuple(tuple(r) for r in hom))
