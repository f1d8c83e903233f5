"""Brondsted-type orders and certified variational points.

Every solver returns a :class:`Certificate` that :func:`verify_certificate`
re-checks by scanning all indices and all points; the specific point chosen
(least-index tie-breaking) is not part of the contract, the certificate is.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import InvalidScaling, KindMismatch, NotTransitive, PreconditionViolated
from .order_core import Objective, QuasiOrder, Relation, bb_maximal, transitivity_witness
from .pseudometric import (
    PseudometricFamily,
    ScalingMap,
    check_scaling,
    require_valid,
    rescale,
    sup_reduction,
)
from .rational import INF
from .structures import SeqVerdict

KINDS = ("fang", "hamel", "ekeland")


@dataclass(frozen=True)
class VariationalInstance:
    family: PseudometricFamily
    objective: Objective
    scaling: Optional[ScalingMap] = None
    start: int = 0

    def __post_init__(self):
        if len(self.objective) != self.family.n_points:
            raise ValueError("objective length differs from carrier size")
        self.family.carrier.check_point(self.start)

    def effective_family(self):
        """The family the clauses are stated in: rescaled when a scaling is present."""
        if self.scaling is None:
            return self.family
        return rescale(self.family, self.scaling)

    def with_start(self, u):
        return VariationalInstance(self.family, self.objective, self.scaling, u)


@dataclass(frozen=True)
class Clause1:
    index: int
    lhs: object  # scaled distance from start to the point
    rhs: object  # objective drop from start to the point


@dataclass(frozen=True)
class Clause2:
    x: int
    index: int  # least index making the inequality strict
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Certificate:
    kind: str
    start: int
    point: int
    order_used: QuasiOrder
    clause1: Tuple[Clause1, ...]
    clause2: Tuple[Clause2, ...] = field(default=())

    @property
    def clause2_vacuous(self):
        return not self.clause2


def _order_from_test(n, test):
    m = [[test(x, y) for y in range(n)] for x in range(n)]
    r = Relation(n, m)
    t = transitivity_witness(r)
    if t is not None:
        raise NotTransitive(t)
    return QuasiOrder(r.carrier, r.rel)


def brondsted_order(d: PseudometricFamily, f: Objective) -> QuasiOrder:
    """``x <= y`` iff ``d(x, y) + f(y) <= f(x)``."""
    if not d.is_single():
        raise KindMismatch("the Brondsted order needs a single distance")
    m = d.dist[0]
    return _order_from_test(d.n_points, lambda x, y: m[x][y] + f[y] <= f[x])


def family_order(E: PseudometricFamily, f: Objective) -> QuasiOrder:
    """``x <= y`` iff ``e_lambda(x, y) <= f(x) - f(y)`` for every index."""
    dist = E.dist
    return _order_from_test(E.n_points, lambda x, y: all(m[x][y] <= f[x] - f[y] for m in dist))


def _certificate(kind, E, f, u, v, order):
    n = E.n_points
    c1 = tuple(Clause1(lam, m[u][v], f[u] - f[v]) for lam, m in enumerate(E.dist))
    c2 = []
    for x in range(n):
        if x == v:
            continue
        gap = f[v] - f[x]
        mu = next((lam for lam, m in enumerate(E.dist) if m[v][x] > gap), None)
        if mu is None:
            raise AssertionError(f"solver returned non-maximal point {v}: no strict index at {x}")
        c2.append(Clause2(x, mu, E.dist[mu][v][x], gap))
    return Certificate(kind, u, v, order, c1, tuple(c2))


def certificate_for(inst: VariationalInstance, v: int, kind="fang") -> Certificate:
    """Certificate for a given candidate point (raises if ``v`` is not maximal)."""
    E = inst.effective_family()
    order = family_order(E, inst.objective)
    return _certificate(kind, E, inst.objective, inst.start, v, order)


def fang_point(inst: VariationalInstance) -> Certificate:
    E = inst.family
    require_valid(E)
    f = inst.objective
    order = family_order(E, f)
    v = bb_maximal(order, f, inst.start)
    return _certificate("fang", E, f, inst.start, v, order)


def hamel_point(inst: VariationalInstance) -> Certificate:
    if inst.scaling is None:
        raise KindMismatch("hamel needs a scaling map")
    check_scaling(inst.scaling, inst.family.index)
    E = rescale(inst.family, inst.scaling)
    f = inst.objective
    order = family_order(E, f)
    v = bb_maximal(order, f, inst.start)
    return _certificate("hamel", E, f, inst.start, v, order)


def ekeland_point(inst: VariationalInstance) -> Certificate:
    if not inst.family.is_single():
        raise KindMismatch("ekeland needs a single-index instance")
    require_valid(inst.family, "metric")
    d = inst.family
    f = inst.objective
    order = brondsted_order(d, f)
    v = bb_maximal(order, f, inst.start)
    return _certificate("ekeland", d, f, inst.start, v, order)


def solve(inst, kind):
    if kind == "fang":
        return fang_point(inst)
    if kind == "hamel":
        return hamel_point(inst)
    if kind == "ekeland":
        return ekeland_point(inst)
    raise KindMismatch(f"unknown solver kind {kind!r}")


def verify_certificate(inst: VariationalInstance, c: Certificate) -> SeqVerdict:
    """Re-derive both clauses by exhaustive scan, then check the stored records.

    Semantic failures are reported before bookkeeping ones, so a certificate
    naming the wrong point fails at the point that defeats it.
    """
    if c.kind == "hamel":
        if inst.scaling is None:
            return SeqVerdict(False, {"check": "kind", "reason": "hamel certificate without scaling"})
        try:
            E = rescale(inst.family, inst.scaling)
        except (InvalidScaling, PreconditionViolated) as exc:
            return SeqVerdict(False, {"check": "instance", "reason": str(exc)})
    else:
        E = inst.family
    f = inst.objective
    n = E.n_points
    u, v = c.start, c.point
    if u != inst.start:
        return SeqVerdict(False, {"check": "start", "expected": inst.start, "found": u})
    if not 0 <= v < n:
        return SeqVerdict(False, {"check": "point", "point": v})

    for lam, m in enumerate(E.dist):
        if not m[u][v] <= f[u] - f[v]:
            return SeqVerdict(False, {"clause": 1, "index": lam, "lhs": m[u][v], "rhs": f[u] - f[v]})
    for x in range(n):
        if x != v and not any(m[v][x] > f[v] - f[x] for m in E.dist):
            return SeqVerdict(False, {"clause": 2, "x": x})

    try:
        order = family_order(E, f)
    except NotTransitive as exc:
        return SeqVerdict(False, {"check": "order", "reason": str(exc)})
    if c.order_used.rel != order.rel:
        return SeqVerdict(False, {"check": "order"})
    if sorted(r.index for r in c.clause1) != list(range(E.n_indices)):
        return SeqVerdict(False, {"check": "clause1 coverage"})
    for r in c.clause1:
        if r.lhs != E.dist[r.index][u][v] or r.rhs != f[u] - f[v]:
            return SeqVerdict(False, {"check": "clause1 record", "index": r.index})
    recorded = {r.x: r for r in c.clause2}
    for x in range(n):
        if x == v:
            continue
        r = recorded.get(x)
        if r is None:
            return SeqVerdict(False, {"check": "clause2 coverage", "x": x})
        if not 0 <= r.index < E.n_indices:
            return SeqVerdict(False, {"check": "clause2 record", "x": x})
        lhs, rhs = E.dist[r.index][v][x], f[v] - f[x]
        if r.lhs != lhs or r.rhs != rhs or not lhs > rhs:
            return SeqVerdict(False, {"check": "clause2 record", "x": x})
    if v in recorded or len(recorded) != len(c.clause2):
        return SeqVerdict(False, {"check": "clause2 extra records"})
    return SeqVerdict(True)


@dataclass(frozen=True)
class MetricSlice:
    """The start's lower section under the sup-distance, as a metric instance."""

    points: Tuple[int, ...]
    instance: VariationalInstance

    def lift(self, x):
        return self.points[x]


def metric_reduction(inst: VariationalInstance) -> MetricSlice:
    E = inst.effective_family()
    delta = sup_reduction(E)
    f = inst.objective
    u = inst.start
    dm = delta.dist[0]
    points = tuple(x for x in range(E.n_points) if dm[u][x] <= f[u] - f[x])
    sub = delta.restrict(points)
    obj = Objective(tuple(f[x] for x in points))
    return MetricSlice(points, VariationalInstance(sub, obj, None, points.index(u)))


def solve_by_reduction(inst: VariationalInstance) -> Certificate:
    """Solve on the metric slice, then certify the lifted point on the original."""
    sl = metric_reduction(inst)
    v = sl.lift(ekeland_point(sl.instance).point)
    return certificate_for(inst, v, "hamel" if inst.scaling is not None else "fang")


def gap_compatibility(E: PseudometricFamily, f: Objective, order=None) -> SeqVerdict:
    """For every ``delta > 0``: ``x <= y`` with gap below ``delta`` puts ``(x, y)``
    in every ``U(lambda, delta)``.

    Quantifying over all positive ``delta`` reduces exactly to
    ``e_lambda(x, y) <= max(gap, 0)`` for every comparable pair.
    """
    if order is None:
        order = family_order(E, f)
    for x, y in order.pairs():
        gap = f[x] - f[y]
        bound = max(gap, 0)
        for lam, m in enumerate(E.dist):
            e = m[x][y]
            if e > bound:
                delta = bound + 1 if e == INF else (bound + e) / 2
                return SeqVerdict(False, {"pair": (x, y), "index": lam, "delta": delta, "distance": e})
    return SeqVerdict(True)
