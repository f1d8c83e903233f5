"""Random valid instances for property suites and the CLI ``--seed`` option.

All generators take a :class:`random.Random` so callers control determinism
(and hypothesis can drive them through ``st.randoms()``). Distances use
denominators dividing ``den`` so that shortest-path sums keep denominators
bounded by ``den``.
"""
import random
from fractions import Fraction
from itertools import product

from .order_core import Objective, QuasiOrder, Relation
from .pseudometric import IndexPoset, PseudometricFamily, ScalingMap
from .variational import VariationalInstance
from .order_core import EventuallyPeriodicSeq

DEN = 16


def _frac(rng, lo, hi, den=DEN):
    return Fraction(rng.randint(int(lo * den), int(hi * den)), den)


def random_metric(rng: random.Random, n, den=DEN, max_weight=4):
    """Shortest-path closure of random positive edge weights: a finite metric."""
    d = [[Fraction(0)] * n for _ in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            d[x][y] = d[y][x] = Fraction(rng.randint(1, max_weight * den), den)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return tuple(tuple(row) for row in d)


def dominated_pseudometric(rng, bound, den=DEN):
    """Random rs-pseudometric below ``bound`` pointwise; usually not triangular."""
    n = len(bound)
    g = [[Fraction(0)] * n for _ in range(n)]
    style = rng.random()
    for x in range(n):
        for y in range(x + 1, n):
            if style < 0.3:
                v = bound[x][y] * Fraction(rng.randint(0, 4), 4)
            else:
                v = Fraction(rng.randint(0, int(bound[x][y] * den)), den)
            g[x][y] = g[y][x] = v
    return g


def random_index_poset(rng, k):
    """Random directed quasi-order on ``k`` indices; index ``k-1`` is a top."""
    pairs = [(i, k - 1) for i in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and rng.random() < (0.3 if i < j else 0.05):
                pairs.append((i, j))
    q = QuasiOrder.closure_of(Relation.from_pairs(k, pairs))
    labels = [f"l{i}" for i in range(k)]
    return IndexPoset(k, q.rel, labels)


def random_fang_family(rng, n, k, den=DEN):
    """Sufficient, monotone, triangular family over a random directed index set.

    Each index draws a pseudometric dominated by a top metric; the member at
    ``lambda`` is the pointwise max over all indices below it, which makes the
    family monotone and puts the top metric at every top index.
    """
    idx = random_index_poset(rng, k)
    top = random_metric(rng, n, den)
    tops = [i for i in range(k) if all(idx.leq[j][i] for j in range(k))]
    gens = []
    for i in range(k):
        gens.append(top if i in tops else dominated_pseudometric(rng, top, den))
    dist = []
    for lam in range(k):
        below = [nu for nu in range(k) if idx.leq[nu][lam]]
        dist.append(tuple(tuple(max(gens[nu][x][y] for nu in below) for y in range(n)) for x in range(n)))
    return PseudometricFamily(n, idx, tuple(dist))


def random_objective(rng, n, den=DEN, max_value=8):
    return Objective(tuple(_frac(rng, 0, max_value, den) for _ in range(n)))


def random_scaling(rng, index: IndexPoset, den=DEN):
    """Increasing positive map: sum of positive weights over indices below."""
    w = [Fraction(rng.randint(1, 2 * den), den) for _ in range(index.size)]
    return ScalingMap(tuple(
        sum((w[nu] for nu in range(index.size) if index.leq[nu][lam]), Fraction(0))
        / index.size
        for lam in range(index.size)
    ))


def random_fang_instance(rng, n_max=8, k_max=4, den=DEN):
    n = rng.randint(1, n_max)
    k = rng.randint(1, k_max)
    family = random_fang_family(rng, n, k, den)
    return VariationalInstance(
        family,
        random_objective(rng, n, den),
        random_scaling(rng, family.index, den),
        rng.randrange(n),
    )


def random_metric_instance(rng, n_max=8, den=DEN):
    n = rng.randint(1, n_max)
    family = PseudometricFamily.single(random_metric(rng, n, den))
    return VariationalInstance(family, random_objective(rng, n, den), None, rng.randrange(n))


def random_quasi_order(rng, n, density=None):
    density = rng.random() * 0.5 if density is None else density
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < density]
    return QuasiOrder.closure_of(Relation.from_pairs(n, pairs))


def random_decreasing_instance(rng, n_max=8, den=DEN):
    """A quasi-order with an objective that never increases along it.

    ``f(x)`` sums nonnegative weights over the up-set of ``x``; up-sets shrink
    along the order, so ``f`` does too.
    """
    n = rng.randint(1, n_max)
    q = random_quasi_order(rng, n)
    w = [Fraction(rng.randint(0, 2 * den), den) if rng.random() < 0.7 else Fraction(0) for _ in range(n)]
    f = Objective(tuple(sum((w[y] for y in range(n) if q.rel[x][y]), Fraction(0)) for x in range(n)))
    return q, f


def random_nonexpansive_instance(rng, n_max=6, den=DEN):
    """Metric plus a 1-Lipschitz nonnegative objective."""
    from .discrete_evp import MetricInstance

    n = rng.randint(1, n_max)
    d = random_metric(rng, n, den, max_weight=rng.choice([1, 2, 4]))
    style = rng.random()
    if style < 0.5:
        # distance to a base point, reflected: the base point sits below everything
        b = rng.randrange(n)
        c = max(d[b]) + _frac(rng, 0, 2, den)
        phi = [c - d[b][x] for x in range(n)]
    elif style < 0.8:
        anchors = rng.sample(range(n), rng.randint(1, n))
        offs = {a: _frac(rng, 0, 3, den) for a in anchors}
        phi = [min(offs[a] + d[a][x] for a in anchors) for x in range(n)]
    else:
        phi = [_frac(rng, 0, 1, den)] * n
    return MetricInstance(PseudometricFamily.single(d), Objective(tuple(phi)))


def random_bmlo_family(rng, n, k, den=DEN):
    """Sufficient, I-triangular generators over a plain index set.

    Generator 0 is a metric; each later generator is either a metric or a
    pseudometric dominated by an earlier metric generator.
    """
    gens = [random_metric(rng, n, den)]
    metric_ids = [0]
    for i in range(1, k):
        if rng.random() < 0.5:
            gens.append(random_metric(rng, n, den))
            metric_ids.append(i)
        else:
            gens.append(dominated_pseudometric(rng, gens[rng.choice(metric_ids)], den))
    labels = [f"f{i}" for i in range(k)]
    return PseudometricFamily(n, IndexPoset.discrete(k, labels), tuple(gens))


def all_sequences(n, max_len):
    """Every prefix/cycle encoding over ``n`` points with total length ``<= max_len``."""
    for total in range(1, max_len + 1):
        for cyc_len in range(1, total + 1):
            for cyc in product(range(n), repeat=cyc_len):
                for pre in product(range(n), repeat=total - cyc_len):
                    yield EventuallyPeriodicSeq(pre, cyc)
