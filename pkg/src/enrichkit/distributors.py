"""Distributors between finite categories and their calculus."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .category import EnrichedCat, terminal
from .errors import AxiomViolation, MismatchError, SchemaError
from .quantale import ONE, ZERO, q, residuate, tnorm_apply

Table = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Distributor:
    """``table[x][y]`` is ``phi(x, y)`` for ``phi: source -+-> target``."""

    source: EnrichedCat
    target: EnrichedCat
    table: Table

    @property
    def tnorm(self):
        return self.source.tnorm

    def __call__(self, x, y) -> Fraction:
        return self.table[self.source.index(x)][self.target.index(y)]

    def __le__(self, other: "Distributor") -> bool:
        _same_ends(self, other)
        return all(a <= b for ra, rb in zip(self.table, other.table) for a, b in zip(ra, rb))

    def __ge__(self, other: "Distributor") -> bool:
        return other <= self

    def op(self) -> "Distributor":
        from .category import opposite

        rows = len(self.table)
        cols = len(self.table[0]) if rows else 0
        t = tuple(tuple(self.table[x][y] for x in range(rows)) for y in range(cols))
        return Distributor(opposite(self.target), opposite(self.source), t)

    def to_json(self) -> dict:
        return {
            "source": list(self.source.elements),
            "target": list(self.target.elements),
            "table": [[str(v) for v in row] for row in self.table],
        }


def _same_ends(a: Distributor, b: Distributor):
    if a.source != b.source or a.target != b.target:
        raise MismatchError("distributors have different source or target")


def make_distributor(source: EnrichedCat, target: EnrichedCat, table, check: bool = True) -> Distributor:
    if source.tnorm != target.tnorm:
        raise MismatchError("categories are enriched over different t-norms")
    if len(table) != source.size or any(len(r) != target.size for r in table):
        raise SchemaError(f"distributor table must be {source.size}x{target.size}")
    t = tuple(tuple(q(v) for v in row) for row in table)
    d = Distributor(source, target, t)
    if check:
        bad = distributor_violation(d)
        if bad is not None:
            raise AxiomViolation(f"not a distributor: {bad}", bad)
    return d


def distributor_violation(d: Distributor) -> Optional[str]:
    X, Y, t = d.source, d.target, d.table
    mul = d.tnorm
    for y in range(Y.size):
        for x1 in range(X.size):
            for x2 in range(X.size):
                if tnorm_apply(mul, t[x2][y], X.hom[x1][x2]) > t[x1][y]:
                    return f"left action fails at ({X.elements[x1]},{X.elements[x2]},{Y.elements[y]})"
    for x in range(X.size):
        for y1 in range(Y.size):
            for y2 in range(Y.size):
                if tnorm_apply(mul, Y.hom[y1][y2], t[x][y1]) > t[x][y2]:
                    return f"right action fails at ({X.elements[x]},{Y.elements[y1]},{Y.elements[y2]})"
    return None


def identity(X: EnrichedCat) -> Distributor:
    return Distributor(X, X, X.hom)


def compose(psi: Distributor, phi: Distributor) -> Distributor:
    """``psi . phi`` for ``phi: X -+-> Y`` and ``psi: Y -+-> Z``."""
    if phi.target != psi.source:
        raise MismatchError("middle categories differ")
    mul = phi.tnorm
    X, Y, Z = phi.source, phi.target, psi.target
    table = tuple(
        tuple(
            max((tnorm_apply(mul, psi.table[y][z], phi.table[x][y]) for y in range(Y.size)), default=ZERO)
            for z in range(Z.size)
        )
        for x in range(X.size)
    )
    return Distributor(X, Z, table)


def extend_left(xi: Distributor, phi: Distributor) -> Distributor:
    """``xi <- phi``: the largest ``zeta: Y -+-> Z`` with ``zeta . phi <= xi``."""
    if xi.source != phi.source:
        raise MismatchError("extend_left needs a common source")
    mul = phi.tnorm
    X, Y, Z = phi.source, phi.target, xi.target
    table = tuple(
        tuple(
            min((residuate(mul, phi.table[x][y], xi.table[x][z]) for x in range(X.size)), default=ONE)
            for z in range(Z.size)
        )
        for y in range(Y.size)
    )
    return Distributor(Y, Z, table)


def extend_right(psi: Distributor, xi: Distributor) -> Distributor:
    """``psi -> xi``: the largest ``lam: X -+-> Y`` with ``psi . lam <= xi``."""
    if psi.target != xi.target:
        raise MismatchError("extend_right needs a common target")
    mul = psi.tnorm
    X, Y, Z = xi.source, psi.source, psi.target
    table = tuple(
        tuple(
            min((residuate(mul, psi.table[y][z], xi.table[x][z]) for z in range(Z.size)), default=ONE)
            for y in range(Y.size)
        )
        for x in range(X.size)
    )
    return Distributor(X, Y, table)


def check_adjoint(psi: Distributor, phi: Distributor) -> bool:
    """Whether ``psi`` is left adjoint to ``phi`` (``psi: X -+-> Y``, ``phi: Y -+-> X``)."""
    if psi.source != phi.target or psi.target != phi.source:
        raise MismatchError("adjoint candidates must run in opposite directions")
    unit = compose(phi, psi)
    counit = compose(psi, phi)
    return identity(psi.source) <= unit and counit <= identity(psi.target)


@dataclass(frozen=True)
class FunctorMap:
    source: EnrichedCat
    target: EnrichedCat
    assignment: Tuple[int, ...]

    def __call__(self, x) -> str:
        return self.target.elements[self.assignment[self.source.index(x)]]


def make_functor(source: EnrichedCat, target: EnrichedCat, assignment) -> FunctorMap:
    """``assignment`` maps source labels (or indices) to target labels (or indices)."""
    if isinstance(assignment, dict):
        idx = tuple(target.index(assignment[e]) for e in source.elements)
    else:
        if len(assignment) != source.size:
            raise SchemaError("assignment length differs from the source size")
        idx = tuple(target.index(a) for a in assignment)
    for i in range(source.size):
        for j in range(source.size):
            if source.hom[i][j] > target.hom[idx[i]][idx[j]]:
                raise AxiomViolation(
                    f"not a functor: X({source.elements[i]},{source.elements[j]}) exceeds its image",
                    (source.elements[i], source.elements[j]),
                )
    return FunctorMap(source, target, idx)


def identity_functor(X: EnrichedCat) -> FunctorMap:
    return FunctorMap(X, X, tuple(range(X.size)))


def graph_of(f: FunctorMap) -> Tuple[Distributor, Distributor, bool]:
    """Graph ``f_*``, cograph ``f^*`` and whether ``f^* . f_* = X``."""
    X, Y, a = f.source, f.target, f.assignment
    lower = Distributor(X, Y, tuple(tuple(Y.hom[a[x]][y] for y in range(Y.size)) for x in range(X.size)))
    upper = Distributor(Y, X, tuple(tuple(Y.hom[y][a[x]] for x in range(X.size)) for y in range(Y.size)))
    fully_faithful = compose(upper, lower).table == X.hom
    return lower, upper, fully_faithful


def star(X: EnrichedCat) -> EnrichedCat:
    """The one-point category over the same t-norm."""
    return terminal(X.tnorm)
