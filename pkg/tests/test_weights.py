import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enrichkit.category import terminal, validate_category
from enrichkit.distributors import compose, identity_functor, make_functor
from enrichkit.errors import AxiomViolation, MismatchError, SchemaError
from enrichkit.quantale import tnorm_apply
from enrichkit.weights import (
    Coweight,
    binary_join_preserved,
    colimit,
    colimit_class,
    colimit_in_values,
    completeness_report,
    corepresentable,
    coscale,
    is_cauchy_weight,
    is_ideal,
    join,
    join_in_order,
    join_of_tensors,
    limit,
    limit_in_values,
    make_coweight,
    make_weight,
    pull_back_weight,
    random_weights,
    repair_to_weight,
    representable,
    representing_elements,
    sample_weights,
    scale,
    sub,
    tensor_cotensor,
    tensor_preserved,
    upper_extension,
    weighted_colimit,
)

from catalog import GODEL, LUK, PRODUCT, chain_on, d2, e2, godel_chain3, named_fixtures, random_categories
from oracles import grid_sup_residuate, is_weight, mul_for

def crisp(t, labels, leq):
    return validate_category(t, labels, [[1 if leq(x, y) else 0 for y in labels] for x in labels])


# finite chains of [0,1] under Goedel, and crisp complete lattices under product
COCOMPLETE = {
    "godel_chain3": godel_chain3(),
    "godel_chain4": chain_on(GODEL, [F(0), F(1, 3), F(2, 3), F(1)]),
    "product_crisp_chain3": crisp(PRODUCT, ["0", "1", "2"], lambda x, y: x <= y),
    "product_diamond": crisp(PRODUCT, ["bot", "a", "b", "top"], lambda x, y: x == y or x == "bot" or y == "top"),
}


def brute_colimits(phi):
    """Elements c with X(c, x) = inf_y phi(y) -> X(y, x), residuation by grid search."""
    X = phi.base
    mul = mul_for(X.tnorm)
    target = [
        min(grid_sup_residuate(mul, phi.values[y], X.hom[y][x], denom=32) for y in range(X.size))
        for x in range(X.size)
    ]
    return tuple(c for c in range(X.size) if list(X.hom[c]) == target)


# -- examples ---------------------------------------------------------------------------

def test_sub_examples():
    X = e2()
    phi = make_weight(X, [1, F(1, 2)])
    assert sub(phi, phi) == 1
    assert sub(phi, make_weight(X, [F(1, 2), F(1, 2)])) == F(1, 2)
    for a in X.elements:
        assert sub(representable(X, a), phi) == phi(a)


def test_colimit_examples():
    X = e2()
    assert colimit(representable(X, "b")) == "b"
    phi = make_weight(X, [1, F(1, 2)])
    assert colimit(phi) == "a" and brute_colimits(phi) == (0,)
    D = d2()
    both = make_weight(D, [1, 1])
    assert colimit(both) is None and brute_colimits(both) == ()


def test_limits_by_duality():
    X = e2()
    assert limit(corepresentable(X, "a")) == "a"
    assert limit(make_coweight(X, [1, 1])) is None
    assert limit(make_coweight(X, [1, 0])) == "a"
    assert limit(make_coweight(X, [1, F(1, 2)])) is None


def test_weight_validation():
    with pytest.raises(AxiomViolation):
        make_weight(e2(), [1, 0])
    with pytest.raises(SchemaError):
        make_weight(e2(), [1])
    with pytest.raises(MismatchError):
        sub(representable(e2(), "a"), representable(d2(PRODUCT), "a"))


def test_weighted_colimit_identity_reduces_to_colimit():
    X = e2()
    for phi in sample_weights(X):
        assert weighted_colimit(identity_functor(X), phi) == colimit(phi)


def test_colimit_in_values_is_a_composite():
    X = e2()
    phi = make_weight(X, [1, F(1, 2)])
    psi = make_coweight(X, [F(1, 2), 1])
    composite = compose(phi.as_distributor(), psi.as_distributor())
    assert colimit_in_values(phi, psi) == composite.table[0][0]
    assert limit_in_values(psi, make_coweight(X, [F(1, 2), 1])) == sub(psi, make_coweight(X, [F(1, 2), 1]))


def test_tensor_and_cotensor():
    for X in named_fixtures().values():
        for x in range(X.size):
            ten, cot = tensor_cotensor(X, 1, X.elements[x])
            assert X.isomorphic(X.index(ten), x) and X.isomorphic(X.index(cot), x)
    # the row r -> X(a, -) = (1, 0) on D2 is the row of a itself
    assert tensor_cotensor(d2(GODEL), F(1, 2), "a") == ("a", "a")
    phi = make_weight(d2(GODEL), [F(1, 2), 0])
    assert colimit(phi) == "a"


def test_tensor_in_weights():
    rng = random.Random(5)
    fx = named_fixtures()
    for X in (e2(), fx["luk_chain3"], fx["product_chain4"]):
        ws = sample_weights(X, rng, 5)
        for phi in ws[:6]:
            for r in (F(0), F(1, 3), F(1, 2), F(7, 8)):
                ten, cot = scale(r, phi), coscale(r, phi)
                for lam in ws[:8]:
                    assert sub(ten, lam) == X.tnorm.residuate(r, sub(phi, lam))
                    assert sub(lam, cot) == X.tnorm.residuate(r, sub(lam, phi))


def test_cauchy_examples():
    X = e2()
    v = is_cauchy_weight(representable(X, "a"))
    assert v.cauchy and v.left_adjoint == corepresentable(X, "a")
    assert is_cauchy_weight(make_weight(X, [1, F(1, 2)])).cauchy
    bad = is_cauchy_weight(make_weight(d2(), [1, 1]))
    assert not bad.cauchy and "unit" in bad.failure


def test_ideal_examples():
    X = e2()
    assert is_ideal(representable(X, "a"))
    v = is_ideal(make_weight(X, [1, F(1, 2)]))
    assert v.ideal and set(v.dominators.values()) == {"a"}
    D = d2()
    both = make_weight(D, [1, 1])
    v = is_ideal(both)
    assert not v.ideal and v.inhabited and v.undominated_pair == ("a", "b")
    # refutation of binary-join preservation with y(a), y(b)
    assert not binary_join_preserved(both, representable(D, "a"), representable(D, "b"))


def test_completeness_examples():
    assert completeness_report(terminal(GODEL)).cocomplete
    r = completeness_report(d2())
    assert not r.cocomplete and not r.all_joins
    assert join_in_order(d2(), [0, 1]) is None
    for name in ("luk_chain3", "product_chain4"):
        # r -> X(x, y) leaves these finite chains, so tensors are missing
        r = completeness_report(named_fixtures()[name])
        assert not r.tensored and not r.cocomplete and r.consistent
    for X in COCOMPLETE.values():
        r = completeness_report(X)
        assert r.cocomplete and r.consistent
    assert completeness_report(d2()).consistent


def test_colimit_is_join_of_tensors():
    rng = random.Random(11)
    for X in COCOMPLETE.values():
        for _ in range(20):
            K = random_categories(1, rng.randrange(10 ** 6), max_size=3)[0]
            K = type(K)(X.tnorm, K.elements, tuple(tuple(1 if i == j else 0 for j in range(K.size)) for i in range(K.size)))
            f = make_functor(K, X, [rng.randrange(X.size) for _ in range(K.size)])
            phi = repair_to_weight(K, [F(rng.randint(0, 8), 8) for _ in range(K.size)])
            assert weighted_colimit(f, phi) == join_of_tensors(f, phi)


def left_adjoint_functors(X):
    """Functors ``f: X -> X`` with a right adjoint ``g``, X(f x, y) = X(x, g y)."""
    out = []
    n = X.size
    for assign in itertools.product(range(n), repeat=n):
        try:
            f = make_functor(X, X, list(assign))
        except Exception:
            continue
        g = []
        for y in range(n):
            col = tuple(X.hom[assign[x]][y] for x in range(n))
            match = [e for e in range(n) if tuple(X.hom[x][e] for x in range(n)) == col]
            if not match:
                break
            g.append(match[0])
        else:
            out.append(f)
    return out


def test_left_adjoints_preserve_colimits():
    for X in COCOMPLETE.values():
        fs = left_adjoint_functors(X)
        assert len(fs) >= 2
        for f in fs:
            for phi in sample_weights(X, random.Random(2), 10):
                c = colimit(phi)
                assert c is not None
                assert X.index(f(c)) in colimit_class(pull_back_weight(f, phi))


# -- properties --------------------------------------------------------------------

def weights_of(seed, random_count=8):
    (X,) = random_categories(1, seed)
    return X, sample_weights(X, random.Random(seed), random_count)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_weights_closed_under_structure(seed):
    X, ws = weights_of(seed)
    mul = mul_for(X.tnorm)
    rng = random.Random(seed)
    for phi in ws:
        assert is_weight(mul, X.hom, phi.values)
    for _ in range(10):
        a, b = rng.choice(ws), rng.choice(ws)
        r = F(rng.randint(0, 8), 8)
        for w in (join(a, b), scale(r, a), coscale(r, a)):
            assert is_weight(mul, X.hom, w.values)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_yoneda_fully_faithful(seed):
    (X,) = random_categories(1, seed)
    for a in X.elements:
        for b in X.elements:
            assert sub(representable(X, a), representable(X, b)) == X(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_class_chain_and_cauchy_colimits(seed):
    X, ws = weights_of(seed)
    for phi in ws:
        rep = bool(representing_elements(phi))
        cau = is_cauchy_weight(phi).cauchy
        ide = is_ideal(phi)
        assert not rep or cau
        assert not cau or ide.ideal
        assert not ide.ideal or ide.inhabited
        assert ide.inhabited == (max(phi.values) == 1)
        if cau and colimit_class(phi):
            assert rep


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_ideals_on_finite_carriers_are_representable(seed):
    X, ws = weights_of(seed, random_count=30)
    for phi in ws:
        assert bool(is_ideal(phi)) == bool(representing_elements(phi))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_sampled_colimit_preservation(seed):
    X, ws = weights_of(seed)
    rng = random.Random(seed)
    lams = ws[:6] + ws[-2:]
    for phi in ws:
        v = is_ideal(phi)
        instances = [tensor_preserved(phi, lam, F(rng.randint(0, 8), 8)) for lam in lams]
        instances += [binary_join_preserved(phi, lam, mu) for lam in lams for mu in lams]
        if v.ideal:
            assert all(instances)
        else:
            assert not all(instances) or not v.inhabited or v.undominated_pair is not None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_colimit_matches_brute_force(seed):
    X, ws = weights_of(seed, random_count=4)
    for phi in ws[:12]:
        assert colimit_class(phi) == brute_colimits(phi)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_repair_gives_least_weight_above(seed):
    (X,) = random_categories(1, seed)
    rng = random.Random(seed)
    raw = [F(rng.randint(0, 8), 8) for _ in range(X.size)]
    w = repair_to_weight(X, raw)
    assert is_weight(mul_for(X.tnorm), X.hom, w.values)
    assert all(a >= b for a, b in zip(w.values, raw))
    # least: each value is reached by a chain through the hom
    for x in range(X.size):
        assert w.values[x] == max(tnorm_apply(X.tnorm, raw[y], X.hom[x][y]) for y in range(X.size))
