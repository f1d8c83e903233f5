"""Checks for the discrete, nonexpansive, countable-range form of Ekeland's principle.

On a finite carrier boundedness, completeness and countability of the
objective's range hold automatically; they are recorded in reports as
``"automatic"`` rather than tested, so the gap between the finite model and
the general statement stays visible.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionViolated
from .order_core import Carrier, Objective, inf_lattice_check, maximal_points, zorn_check
from .pseudometric import PseudometricFamily, validate_family
from .rational import INF
from .structures import SeqVerdict
from .variational import brondsted_order


@dataclass(frozen=True)
class MetricInstance:
    family: PseudometricFamily
    objective: Objective

    def __post_init__(self):
        if not self.family.is_single():
            raise ValueError("a metric instance has exactly one distance")
        if len(self.objective) != self.family.n_points:
            raise ValueError("objective length differs from carrier size")
        if any(v == INF for row in self.family.dist[0] for v in row):
            raise ValueError("metric distances must be finite")
        report = validate_family(self.family)
        if not report.all_hold():
            raise PreconditionViolated(f"not a metric: {', '.join(report.failures())}", report)

    @classmethod
    def from_matrix(cls, d, phi):
        return cls(PseudometricFamily.single(d), Objective(tuple(phi)))

    @property
    def carrier(self) -> Carrier:
        return self.family.carrier

    @property
    def d(self):
        return self.family.dist[0]


def is_discrete(m: MetricInstance):
    """Returns ``(True, radii)`` with ``radii[x]`` the least distance from ``x``
    to another point; the open ball of that radius is ``{x}``."""
    d = m.d
    n = m.carrier.size
    radii = []
    for x in range(n):
        others = [d[x][y] for y in range(n) if y != x]
        radii.append(min(others) if others else Fraction(1))
    ok = all(r > 0 for r in radii)
    return ok, tuple(radii)


def is_nonexpansive(m: MetricInstance) -> SeqVerdict:
    d, f = m.d, m.objective
    n = m.carrier.size
    for x in range(n):
        for y in range(x + 1, n):
            if abs(f[x] - f[y]) > d[x][y]:
                return SeqVerdict(False, {"pair": (x, y), "gap": abs(f[x] - f[y]), "distance": d[x][y]},
                                  {"countable_range": "automatic"})
    return SeqVerdict(True, info={"countable_range": "automatic"})


def evpdlc_check(m: MetricInstance) -> SeqVerdict:
    """Evaluate the hypotheses and, separately, the Zorn conclusion.

    The verdict fails only when every hypothesis holds and the conclusion does
    not, i.e. when the instance is a counterexample to the implication.
    """
    order = brondsted_order(m.family, m.objective)
    discrete, radii = is_discrete(m)
    lattice = inf_lattice_check(order)
    nonexp = is_nonexpansive(m)
    maxima = maximal_points(order)
    zorn = zorn_check(order)
    cofinal = {u: next((v for v in maxima if order.rel[u][v]), None) for u in range(order.size)}
    hypotheses = {
        "discrete": discrete,
        "bounded": "automatic",
        "complete": "automatic",
        "inf_lattice": lattice,
        "nonexpansive": nonexp.holds,
        "countable_range": "automatic",
    }
    failed = [k for k, v in hypotheses.items() if v is False]
    info = {
        "hypotheses": hypotheses,
        "failed_hypotheses": failed,
        "radii": radii,
        "conclusion": zorn,
        "maximal": maxima,
        "cofinal_witness": cofinal,
    }
    if not failed and not zorn:
        return SeqVerdict(False, {"claim": "Zorn order", "cofinal_witness": cofinal}, info)
    return SeqVerdict(True, info=info)
