"""Shared fixtures: t-norm catalog, named finite categories, samplers."""
import random
from fractions import Fraction as F

from enrichkit.category import EnrichedCat, discrete, random_category, terminal, validate_category
from enrichkit.nets import ChainMonotone, EventuallyConstant, EventuallyPeriodic, Net
from enrichkit.quantale import godel, lukasiewicz, make_ordinal_sum, product

GODEL = godel()
PRODUCT = product()
LUK = lukasiewicz()
OS_PROD = make_ordinal_sum([(F(1, 5), F(3, 5), "product")])
OS_LUK = make_ordinal_sum([(F(1, 2), 1, "lukasiewicz")])
OS_MIX = make_ordinal_sum([(0, F(1, 3), "product"), (F(1, 2), 1, "lukasiewicz")])

TNORMS = {
    "godel": GODEL,
    "product": PRODUCT,
    "lukasiewicz": LUK,
    "os_prod": OS_PROD,
    "os_luk": OS_LUK,
    "os_mix": OS_MIX,
}


def e2():
    return validate_category(GODEL, ["a", "b"], [[1, 0], [F(1, 2), 1]])


def d2(t=GODEL):
    return discrete(t, ["a", "b"])


def godel_chain3():
    pts = [F(0), F(1, 2), F(1)]
    return validate_category(GODEL, ["0", "1/2", "1"], [[GODEL.residuate(x, y) for y in pts] for x in pts])


def chain_on(t, pts):
    return validate_category(t, [str(p) for p in pts], [[t.residuate(x, y) for y in pts] for x in pts])


def iso_pair(t=PRODUCT):
    return validate_category(t, ["a", "b"], [[1, 1], [1, 1]])


def iso_pair_plus(t=LUK):
    # a and b are isomorphic, c sits apart
    return validate_category(t, ["a", "b", "c"], [[1, 1, F(1, 2)], [1, 1, F(1, 2)], [F(1, 4), F(1, 4), 1]])


def luk_metric3():
    return validate_category(LUK, ["a", "b", "c"], [[1, F(7, 10), F(1, 2)], [F(4, 5), 1, F(4, 5)], [F(1, 2), F(7, 10), 1]])


def named_fixtures():
    """Small hand-made categories, separated and not."""
    return {
        "terminal": terminal(GODEL),
        "e2": e2(),
        "d2_godel": d2(GODEL),
        "d2_product": d2(PRODUCT),
        "godel_chain3": godel_chain3(),
        "product_chain4": chain_on(PRODUCT, [F(0), F(1, 4), F(1, 2), F(1)]),
        "luk_chain3": chain_on(LUK, [F(0), F(1, 2), F(1)]),
        "os_chain4": chain_on(OS_PROD, [F(0), F(3, 10), F(3, 5), F(1)]),
        "iso_pair": iso_pair(),
        "iso_pair_plus": iso_pair_plus(),
        "luk_metric3": luk_metric3(),
    }


def random_categories(count, seed, max_size=5, min_size=1, p_one=0.2):
    """``count`` random categories over the t-norm catalog."""
    rng = random.Random(seed)
    names = sorted(TNORMS)
    out = []
    for _ in range(count):
        t = TNORMS[rng.choice(names)]
        n = rng.randint(min_size, max_size)
        out.append(random_category(t, n, rng, p_one=p_one))
    return out


def all_fixtures(random_count, seed, max_size=5):
    return list(named_fixtures().values()) + random_categories(random_count, seed, max_size)


def random_finite_net(X: EnrichedCat, rng: random.Random, forward_cauchy_bias=0.7) -> Net:
    """Random finitely presented net; biased towards tails inside one isomorphism class."""
    n = X.size
    prefix = tuple(rng.randrange(n) for _ in range(rng.randint(1, 4)))
    if rng.random() < 0.3:
        return Net(X, prefix, EventuallyConstant(rng.randrange(n)))
    if rng.random() < forward_cauchy_bias:
        cls = X.iso_class(rng.randrange(n))
        cycle = tuple(rng.choice(cls) for _ in range(rng.randint(1, 4)))
    else:
        cycle = tuple(rng.randrange(n) for _ in range(rng.randint(2, 4)))
    return Net(X, prefix, EventuallyPeriodic(cycle))


def random_chain_net(C, rng: random.Random, denom=16) -> Net:
    direction = rng.choice(["up", "down"])
    lo, hi = (1, denom) if direction == "up" else (0, denom - 1)
    L = F(rng.randint(lo, hi), denom)
    attained = rng.random() < 0.15
    return Net(C, (F(rng.randint(0, denom), denom),), ChainMonotone(L, direction, attained))
