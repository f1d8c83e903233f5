"""Finite quasi-orders, objective maximality and the Brezis-Browder iteration.

Points of a carrier are the integers ``0 .. size-1``. Relations are stored as
immutable boolean matrices, ``rel[x][y]`` meaning ``x R y``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .rational import INF, ext
from .errors import (
    ChainBoundExceeded,
    NotAntisymmetric,
    NotReflexive,
    NotTransitive,
    PreconditionViolated,
    SuccessorMissing,
)

Matrix = Tuple[Tuple[bool, ...], ...]


@dataclass(frozen=True)
class Carrier:
    size: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"carrier size must be a positive integer, got {self.size!r}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(l) for l in self.labels))
            if len(self.labels) != self.size:
                raise ValueError("one label per point is required")

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    def check_point(self, x):
        if not isinstance(x, int) or not 0 <= x < self.size:
            raise IndexError(f"point {x!r} is not in a carrier of size {self.size}")


def _as_carrier(carrier):
    return carrier if isinstance(carrier, Carrier) else Carrier(int(carrier))


def _freeze_matrix(rel, n):
    rows = tuple(tuple(bool(v) for v in row) for row in rel)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"relation matrix must be {n}x{n}")
    return rows


@dataclass(frozen=True)
class Relation:
    """An arbitrary binary relation on a carrier."""

    carrier: Carrier
    rel: Matrix

    def __post_init__(self):
        object.__setattr__(self, "carrier", _as_carrier(self.carrier))
        object.__setattr__(self, "rel", _freeze_matrix(self.rel, self.carrier.size))

    @classmethod
    def from_pairs(cls, carrier, pairs):
        carrier = _as_carrier(carrier)
        n = carrier.size
        m = [[False] * n for _ in range(n)]
        for x, y in pairs:
            carrier.check_point(x)
            carrier.check_point(y)
            m[x][y] = True
        return cls(carrier, m)

    @property
    def size(self):
        return self.carrier.size

    def __call__(self, x, y):
        return self.rel[x][y]

    def pairs(self):
        n = self.size
        return [(x, y) for x in range(n) for y in range(n) if self.rel[x][y]]

    def successors(self, x):
        return [y for y, v in enumerate(self.rel[x]) if v]


def reflexivity_witness(r):
    for x in range(r.size):
        if not r.rel[x][x]:
            return x
    return None


def transitivity_witness(r):
    """Least triple ``(x, y, z)`` with ``x R y``, ``y R z`` but not ``x R z``."""
    m = r.rel
    n = r.size
    for x in range(n):
        row = m[x]
        for y in range(n):
            if not row[y]:
                continue
            for z in range(n):
                if m[y][z] and not row[z]:
                    return (x, y, z)
    return None


def antisymmetry_witness(r):
    m = r.rel
    for x in range(r.size):
        for y in range(x + 1, r.size):
            if m[x][y] and m[y][x]:
                return (x, y)
    return None


class QuasiOrder(Relation):
    """A reflexive and transitive relation; construction validates both."""

    def __post_init__(self):
        super().__post_init__()
        x = reflexivity_witness(self)
        if x is not None:
            raise NotReflexive(x)
        t = transitivity_witness(self)
        if t is not None:
            raise NotTransitive(t)

    @classmethod
    def identity(cls, carrier):
        carrier = _as_carrier(carrier)
        return cls.from_pairs(carrier, [(x, x) for x in carrier])

    @classmethod
    def closure_of(cls, r):
        """Reflexive-transitive closure of an arbitrary relation."""
        n = r.size
        m = [list(row) for row in r.rel]
        for x in range(n):
            m[x][x] = True
        for k in range(n):
            mk = m[k]
            for i in range(n):
                if m[i][k]:
                    mi = m[i]
                    for j in range(n):
                        if mk[j]:
                            mi[j] = True
        return cls(r.carrier, m)

    def is_antisymmetric(self):
        return antisymmetry_witness(self) is None


@dataclass(frozen=True)
class Objective:
    """Nonnegative exact values, one per carrier point."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(ext(v) for v in self.values)
        for i, v in enumerate(vals):
            if v == INF:
                raise ValueError(f"objective value at point {i} is infinite")
            if v < 0:
                raise ValueError(f"objective value at point {i} is negative: {v}")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, x):
        return self.values[x]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @classmethod
    def constant(cls, size, c=0):
        return cls((Fraction(c),) * size)


@dataclass(frozen=True)
class EventuallyPeriodicSeq:
    """The infinite sequence ``prefix + cycle + cycle + ...``."""

    prefix: Tuple[int, ...] = ()
    cycle: Tuple[int, ...] = field(default=(0,))

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise ValueError("cycle must be nonempty")

    @classmethod
    def constant(cls, x):
        return cls((), (x,))

    def __getitem__(self, n):
        p = len(self.prefix)
        if n < p:
            return self.prefix[n]
        return self.cycle[(n - p) % len(self.cycle)]

    def take(self, n):
        return [self[i] for i in range(n)]

    def __len__(self):
        # length of the finite encoding, not of the sequence
        return len(self.prefix) + len(self.cycle)

    def points(self):
        return set(self.prefix) | set(self.cycle)

    def consecutive_pairs(self):
        """Every pair ``(x_n, x_{n+1})`` that occurs in the infinite sequence."""
        seq = self.prefix + self.cycle + self.cycle[:1]
        return list(zip(seq, seq[1:]))

    def cycle_positions(self):
        p = len(self.prefix)
        return [(p + j, y) for j, y in enumerate(self.cycle)]


def is_quasi_order(r: Relation) -> bool:
    return reflexivity_witness(r) is None and transitivity_witness(r) is None


def up_set(q: Relation, x: int) -> frozenset:
    q.carrier.check_point(x)
    return frozenset(q.successors(x))


def beta(q, f, v):
    """Least objective value over the up-set of ``v``."""
    return min(f[y] for y in up_set(q, v))


def is_phi_maximal(q, f, z):
    fz = f[z]
    return all(f[y] == fz for y in up_set(q, z))


def decreasing_witness(q, f):
    for x, y in q.pairs():
        if f[x] < f[y]:
            return (x, y)
    return None


def is_decreasing(q, f) -> bool:
    return decreasing_witness(q, f) is None


def bb_trajectory(q, f, u):
    """Points visited by the halving iteration starting at ``u``.

    From the current point ``v`` the walk stops when ``f(v) == beta(v)``;
    otherwise it moves to the least-index ``w`` above ``v`` with
    ``f(w) < (f(v) + beta(v)) / 2``.
    """
    w = decreasing_witness(q, f)
    if w is not None:
        raise PreconditionViolated(
            f"objective is not decreasing along the order: {w[0]}<={w[1]} "
            f"but f({w[0]})={f[w[0]]} < f({w[1]})={f[w[1]]}",
            report={"pair": w},
        )
    q.carrier.check_point(u)
    path = [u]
    v = u
    while True:
        ups = sorted(up_set(q, v))
        b = min(f[y] for y in ups)
        if f[v] == b:
            return path
        threshold = (f[v] + b) / 2
        v = next(y for y in ups if f[y] < threshold)
        path.append(v)


def bb_maximal(q, f, u) -> int:
    return bb_trajectory(q, f, u)[-1]


def dependent_chain(r: Relation, a: int, bound: Optional[int] = None) -> EventuallyPeriodicSeq:
    """Least-successor walk from ``a``, returned in prefix/cycle form."""
    r.carrier.check_point(a)
    for c in range(r.size):
        if not any(r.rel[c]):
            raise SuccessorMissing(c)
    if bound is None:
        bound = r.size
    if bound < 1:
        raise ValueError("bound must be positive")
    seen = {}
    walk = []
    x = a
    while x not in seen:
        if len(walk) >= bound:
            raise ChainBoundExceeded(f"no cycle closed within {bound} steps")
        seen[x] = len(walk)
        walk.append(x)
        x = r.rel[x].index(True)
    start = seen[x]
    return EventuallyPeriodicSeq(tuple(walk[:start]), tuple(walk[start:]))


def maximal_points(q) -> list:
    return [z for z in range(q.size) if up_set(q, z) == {z}]


def zorn_check(q) -> bool:
    maxima = maximal_points(q)
    if not maxima:
        return False
    return all(any(q.rel[u][v] for v in maxima) for u in range(q.size))


def meet(q, x, y):
    """Greatest common lower bound of ``x`` and ``y``, or ``None``."""
    lower = [l for l in range(q.size) if q.rel[l][x] and q.rel[l][y]]
    for g in lower:
        if all(q.rel[l][g] for l in lower):
            return g
    return None


def inf_lattice_check(q) -> bool:
    w = antisymmetry_witness(q)
    if w is not None:
        raise NotAntisymmetric(w)
    n = q.size
    return all(meet(q, x, y) is not None for x in range(n) for y in range(x + 1, n))


def strongly_connected_components(q):
    """Equivalence classes of ``x <= y <= x`` in a quasi-order, least point first."""
    comps = []
    assigned = set()
    for x in range(q.size):
        if x in assigned:
            continue
        comp = tuple(y for y in range(q.size) if q.rel[x][y] and q.rel[y][x])
        assigned.update(comp)
        comps.append(comp)
    return comps
