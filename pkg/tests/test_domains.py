import random
from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from enrichkit.category import discrete, is_separated, terminal
from enrichkit.chain import V, V_OP, ChainCat, ChainIdeal
from enrichkit.distributors import identity
from enrichkit.domains import cauchy_completion, continuity_report, ideal_family, smyth_report, way_below
from enrichkit.nets import classify_net, net_limits
from enrichkit.quantale import tnorm_apply
from enrichkit.weights import colimit_class, representable, sub

from catalog import GODEL, PRODUCT, TNORMS, d2, e2, iso_pair, named_fixtures, random_categories, random_finite_net
from oracles import grid_sup_residuate, mul_for


def way_below_oracle(X):
    """inf over points a of X(x, a) -> X(y, a), residuation by grid search."""
    mul = mul_for(X.tnorm)
    n = X.size
    return tuple(
        tuple(min(grid_sup_residuate(mul, X.hom[x][a], X.hom[y][a], denom=32) for a in range(n)) for x in range(n))
        for y in range(n)
    )


# -- examples ---------------------------------------------------------------------

def test_way_below_examples():
    assert way_below(terminal(GODEL)).as_distributor() == identity(terminal(GODEL))
    X = e2()
    assert way_below(X)("b", "a") == F(1, 2) == X("b", "a")
    D = discrete(PRODUCT, ["a", "b"])
    assert way_below(D).as_distributor() == identity(D)


def test_continuity_examples():
    for X in named_fixtures().values():
        r = continuity_report(X)
        assert r.continuous and r.interpolation and r.algebraic
        assert set(r.compact) == set(X.elements)
    r = continuity_report(ChainCat(GODEL, V))
    assert not r.algebraic and F(1, 2) not in r.compact
    for t in TNORMS.values():
        assert continuity_report(ChainCat(t, V_OP)).continuous


def test_smyth_report_examples():
    r = smyth_report(e2())
    assert r.separated and r.cauchy_complete and r.yoneda_complete and r.smyth_complete and r.smyth_completable
    r = smyth_report(iso_pair())
    assert not r.smyth_complete and r.smyth_completable
    assert r.certificates["isomorphic_pair"] == ("a", "b")
    completion = cauchy_completion(iso_pair())
    assert completion.category.size == 1 and completion.yoneda_equations() == (True, True)
    assert smyth_report(completion.category).smyth_complete
    r = smyth_report(ChainCat(PRODUCT, V_OP))
    assert r.yoneda_complete and not r.smyth_complete
    assert r.certificates["non_representable_ideal"] == ChainIdeal(F(0), False)
    assert r.to_json()["certificates"]["non_representable_ideal"] == {"limit": "0", "attained": False}


def test_report_json_is_deterministic():
    assert smyth_report(d2()).to_json() == smyth_report(d2()).to_json()
    assert continuity_report(e2()).to_json()["compact"] == ["a", "b"]


# -- properties -------------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_way_below_formula(seed):
    (X,) = random_categories(1, seed, max_size=4)
    wb = way_below(X)
    assert wb.table == way_below_oracle(X)
    assert all(wb.table[y][x] <= X.hom[y][x] for y in range(X.size) for x in range(X.size))
    # enumerating more ideals changes nothing on a finite carrier
    assert way_below(X, ideal_family(X, random.Random(seed), 10)).table == wb.table


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_compactness_criteria_agree(seed):
    (X,) = random_categories(1, seed, max_size=4)
    ideals = ideal_family(X, random.Random(seed), 10)
    wb = way_below(X, ideals)
    t = X.tnorm
    for a in range(X.size):
        colim = [(phi, colimit_class(phi)[0]) for phi in ideals]
        preserves = all(
            X.hom[a][c] == max(tnorm_apply(t, phi.values[x], X.hom[a][x]) for x in range(X.size)) for phi, c in colim
        )
        at_a = all(X.hom[a][c] == phi.values[a] for phi, c in colim)
        below = all(wb.table[y][a] == X.hom[y][a] for y in range(X.size))
        assert preserves == at_a == below


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_completeness_bundle(seed):
    rng = random.Random(seed)
    (X,) = random_categories(1, seed, max_size=4, p_one=0.4)
    r = smyth_report(X, random.Random(seed), 10)
    assert not r.smyth_complete or (r.cauchy_complete and r.yoneda_complete and r.smyth_completable)
    assert r.smyth_complete == is_separated(X)
    nets = [random_finite_net(X, rng) for _ in range(10)]
    fwd = [n for n in nets if classify_net(n)[0]]
    unique = all(len(net_limits(n).bilimits) == 1 for n in fwd)
    assert r.smyth_complete == unique == (r.cauchy_complete and r.smyth_completable)
    # every ideal Cauchy iff every forward Cauchy net Cauchy
    assert r.smyth_completable == all(classify_net(n)[1] for n in fwd)
    if r.smyth_complete:
        assert all(classify_net(n)[1] for n in fwd)
    if r.smyth_completable:
        for phi in ideal_family(X, rng, 10):
            (c, *_) = colimit_class(phi)
            for a in range(X.size):
                assert sub(representable(X, a), phi) == phi.values[a] == X.hom[a][c]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_algebraic_implies_continuous(seed):
    (X,) = random_categories(1, seed, max_size=4)
    r = continuity_report(X, ideal_family(X, random.Random(seed), 10))
    assert not r.algebraic or r.continuous
    if r.continuous:
        assert r.interpolation


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_completion_equations(seed):
    (X,) = random_categories(1, seed, max_size=4, p_one=0.4)
    completion = cauchy_completion(X, random.Random(seed))
    assert completion.yoneda_equations() == (True, True)
    assert is_separated(completion.category)
    assert smyth_report(completion.category, random.Random(seed), 5).smyth_complete
