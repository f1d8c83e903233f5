"""Entourage systems and sequence predicates on finite carriers.

Sequences are eventually periodic (:class:`EventuallyPeriodicSeq`). On a
finite carrier such a sequence has decidable limit behaviour: a quantity that
takes finitely many values tends to zero iff it is zero on the cycle, and a
property holds "from some rank on" iff it holds on the cycle.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from .errors import PreconditionViolated
from .order_core import (
    Carrier,
    EventuallyPeriodicSeq,
    _as_carrier,
    is_phi_maximal,
    up_set,
)
from .rational import INF

Pairs = FrozenSet[Tuple[int, int]]


@dataclass(frozen=True)
class SeqVerdict:
    holds: bool
    witness: Optional[dict] = None
    info: Optional[dict] = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    def __bool__(self):
        return self.holds


def diagonal(n) -> Pairs:
    return frozenset((x, x) for x in range(n))


def full(n) -> Pairs:
    return frozenset((x, y) for x in range(n) for y in range(n))


def inverse(v: Pairs) -> Pairs:
    return frozenset((y, x) for x, y in v)


def compose(v: Pairs, w: Pairs) -> Pairs:
    """``{(x, z) : (x, y) in v, (y, z) in w}``."""
    succ = {}
    for y, z in w:
        succ.setdefault(y, []).append(z)
    return frozenset((x, z) for x, y in v for z in succ.get(y, ()))


@dataclass(frozen=True)
class EntourageSystem:
    carrier: Carrier
    members: Tuple[Pairs, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "carrier", _as_carrier(self.carrier))
        members = tuple(frozenset((int(x), int(y)) for x, y in m) for m in self.members)
        if not members:
            raise ValueError("an entourage system needs at least one member")
        n = self.carrier.size
        for m in members:
            for x, y in m:
                if not (0 <= x < n and 0 <= y < n):
                    raise ValueError(f"pair ({x}, {y}) outside carrier of size {n}")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def intersection(self) -> Pairs:
        out = self.members[0]
        for m in self.members[1:]:
            out = out & m
        return out

    def contains_diagonal(self):
        """Per member: does it contain the diagonal?"""
        d = diagonal(self.carrier.size)
        return tuple(d <= m for m in self.members)

    def is_pseudo_uniformity(self):
        return diagonal(self.carrier.size) <= self.intersection()

    def is_separated(self):
        return self.intersection() == diagonal(self.carrier.size)


def canonical_entourages(E) -> EntourageSystem:
    """All distinct strict sublevel relations ``{e_lambda < r}``, ``r > 0``.

    Only finitely many relations arise: one per positive distance value of
    each member, plus one for any radius above the largest finite value.
    """
    n = E.n_points
    members = []
    labels = []
    seen = set()
    for lam, m in enumerate(E.dist):
        finite = {v for row in m for v in row if v != INF}
        radii = sorted(v for v in finite if v > 0)
        radii.append(max(finite, default=Fraction(0)) + 1)
        for r in radii:
            u = frozenset((x, y) for x in range(n) for y in range(n) if m[x][y] < r)
            if u not in seen:
                seen.add(u)
                members.append(u)
                labels.append(f"U({E.index.label(lam)},{r})")
    return EntourageSystem(E.carrier, tuple(members), tuple(labels))


def is_fundamental_system(V: EntourageSystem) -> SeqVerdict:
    """Check that the members form a base for a uniformity.

    Directed under reverse inclusion, every member contains the diagonal, and
    each member ``V`` admits some ``W`` with ``W`` inside ``V``'s inverse and
    ``W o W`` inside ``V``.
    """
    members = V.members
    d = diagonal(V.carrier.size)
    for i, m in enumerate(members):
        if not d <= m:
            missing = min(d - m)
            return SeqVerdict(False, {"axiom": "diagonal", "member": i, "pair": missing})
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            both = members[i] & members[j]
            if not any(m <= both for m in members):
                return SeqVerdict(False, {"axiom": "directed", "members": (i, j)})
    for i, v in enumerate(members):
        v_inv = inverse(v)
        if not any(w <= v_inv and compose(w, w) <= v for w in members):
            return SeqVerdict(False, {"axiom": "square-root", "member": i})
    return SeqVerdict(True)


def converges(s: EventuallyPeriodicSeq, x: int, E) -> SeqVerdict:
    """``x`` is an E-limit of ``s``: every cycle point is at distance 0 from ``x``
    under every member."""
    for lam, m in enumerate(E.dist):
        for pos, y in s.cycle_positions():
            if m[y][x] != 0:
                return SeqVerdict(False, {"index": lam, "position": pos, "point": y, "distance": m[y][x]})
    return SeqVerdict(True)


def is_cauchy(s: EventuallyPeriodicSeq, E) -> SeqVerdict:
    cyc = s.cycle_positions()
    for lam, m in enumerate(E.dist):
        for a, (p, y) in enumerate(cyc):
            for q, z in cyc[a + 1:]:
                if m[y][z] != 0:
                    return SeqVerdict(False, {"index": lam, "positions": (p, q), "distance": m[y][z]})
    return SeqVerdict(True)


def is_convergent(s, E) -> SeqVerdict:
    """Some point of the carrier is an E-limit of ``s``."""
    for x in range(E.n_points):
        if converges(s, x, E):
            return SeqVerdict(True, info={"limit": x})
    return SeqVerdict(False, {"limit": None})


def is_asymptotic(s: EventuallyPeriodicSeq, V: EntourageSystem) -> SeqVerdict:
    cyc = s.cycle
    p = len(s.prefix)
    for j in range(len(cyc)):
        pair = (cyc[j], cyc[(j + 1) % len(cyc)])
        for i, m in enumerate(V.members):
            if pair not in m:
                return SeqVerdict(False, {"member": i, "positions": (p + j, p + j + 1)})
    return SeqVerdict(True)


def is_ascending(s: EventuallyPeriodicSeq, q) -> bool:
    return all(q.rel[a][b] for a, b in s.consecutive_pairs())


def is_bounded_above(s: EventuallyPeriodicSeq, x: int, q) -> bool:
    """The bounded-from-above convergence: every term is below ``x``."""
    return all(q.rel[y][x] for y in s.points())


def is_compatible(V: EntourageSystem, q, f) -> SeqVerdict:
    """Each member admits a positive ``delta`` such that comparable pairs with
    objective gap below ``delta`` lie in the member.

    Decided exactly: a member fails iff some comparable pair outside it has
    gap ``<= 0``; otherwise ``delta`` is the least gap over comparable pairs
    outside it (1 when there are none).
    """
    deltas = []
    comparable = q.pairs()
    for i, m in enumerate(V.members):
        gaps = []
        for x, y in comparable:
            if (x, y) in m:
                continue
            gap = f[x] - f[y]
            if gap <= 0:
                return SeqVerdict(False, {"member": i, "pair": (x, y), "gap": gap})
            gaps.append(gap)
        deltas.append(min(gaps) if gaps else Fraction(1))
    return SeqVerdict(True, info={"delta": tuple(deltas)})


def check_selfclosed(q, E) -> SeqVerdict:
    """Every E-limit of an ascending E-convergent sequence bounds it from above.

    An ascending eventually periodic sequence has all cycle points in one
    equivalence class of the quasi-order and every prefix point below them.
    If it converges to ``x`` but some term is not below ``x``, then some
    cycle point ``c`` is not below ``x`` either (otherwise transitivity would
    bound the whole sequence), and the constant sequence at ``c`` is already
    a counterexample. So it suffices to scan constant sequences.
    """
    n = E.n_points
    for c in range(n):
        s = EventuallyPeriodicSeq.constant(c)
        for x in range(n):
            if not q.rel[c][x] and converges(s, x, E):
                return SeqVerdict(False, {"sequence": {"prefix": [], "cycle": [c]}, "limit": x})
    return SeqVerdict(True)


def is_v_maximal(q, V: EntourageSystem, z):
    inter = V.intersection()
    return all((z, w) in inter for w in up_set(q, z))


def maximal_transfer_check(q, f, V: EntourageSystem) -> SeqVerdict:
    """Objective-maximal points are entourage-maximal; with a separated system
    entourage-maximal equals order-maximal and the order is antisymmetric."""
    compat = is_compatible(V, q, f)
    if not compat:
        raise PreconditionViolated("entourage system is not compatible with (order, objective)", compat)
    n = q.size
    for z in range(n):
        if is_phi_maximal(q, f, z) and not is_v_maximal(q, V, z):
            return SeqVerdict(False, {"claim": "phi-maximal implies V-maximal", "point": z})
    separated = V.is_separated()
    if separated:
        for z in range(n):
            if is_v_maximal(q, V, z) != (up_set(q, z) == {z}):
                return SeqVerdict(False, {"claim": "V-maximal iff maximal", "point": z})
        for x in range(n):
            for y in range(x + 1, n):
                if q.rel[x][y] and q.rel[y][x]:
                    return SeqVerdict(False, {"claim": "antisymmetry", "pair": (x, y)})
    return SeqVerdict(True, info={"separated": separated})
