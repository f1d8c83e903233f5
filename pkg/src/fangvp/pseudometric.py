"""Families of rs-pseudometrics over a finite carrier.

A family is indexed by a finite quasi-ordered index set. Distances are exact
rationals or ``INF``. Construction only checks shape and nonnegativity; the
structural axioms (reflexive, symmetric, sufficient, monotone, triangular,
directed) are reported by :func:`validate_family` so that invalid inputs can
still be loaded and diagnosed.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Optional, Tuple

from .errors import InvalidScaling, NotITriangular, PreconditionViolated
from .order_core import Carrier, QuasiOrder, _as_carrier
from .rational import INF, ext

DistMatrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class IndexPoset:
    """Finite quasi-ordered index set. Directedness is reported, not enforced."""

    size: int
    leq: Tuple[Tuple[bool, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        # QuasiOrder validates shape, reflexivity and transitivity
        q = QuasiOrder(Carrier(self.size, self.labels), self.leq)
        object.__setattr__(self, "leq", q.rel)
        if self.labels is not None:
            object.__setattr__(self, "labels", q.carrier.labels)

    @classmethod
    def discrete(cls, size, labels=None):
        return cls(size, [[i == j for j in range(size)] for i in range(size)], labels)

    @classmethod
    def chain(cls, size, labels=None):
        return cls(size, [[i <= j for j in range(size)] for i in range(size)], labels)

    @classmethod
    def from_pairs(cls, size, pairs, labels=None):
        m = [[i == j for j in range(size)] for i in range(size)]
        for i, j in pairs:
            m[i][j] = True
        return cls(size, m, labels)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def above(self, i):
        return [j for j in range(self.size) if self.leq[i][j]]

    def directedness_witness(self):
        for a in range(self.size):
            for b in range(a + 1, self.size):
                if not any(self.leq[a][c] and self.leq[b][c] for c in range(self.size)):
                    return (a, b)
        return None


def _freeze_dist(matrix, n):
    rows = tuple(tuple(ext(v) for v in row) for row in matrix)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"distance matrix must be {n}x{n}")
    for x, row in enumerate(rows):
        for y, v in enumerate(row):
            if v < 0:
                raise ValueError(f"negative distance {v} at ({x}, {y})")
    return rows


@dataclass(frozen=True)
class PseudometricFamily:
    carrier: Carrier
    index: IndexPoset
    dist: Tuple[DistMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "carrier", _as_carrier(self.carrier))
        n = self.carrier.size
        dist = tuple(_freeze_dist(m, n) for m in self.dist)
        if len(dist) != self.index.size:
            raise ValueError(f"expected {self.index.size} distance matrices, got {len(dist)}")
        object.__setattr__(self, "dist", dist)

    @classmethod
    def single(cls, matrix, carrier=None, label=None):
        """One-member family, the classical metric setting."""
        if carrier is None:
            carrier = Carrier(len(matrix))
        return cls(carrier, IndexPoset.discrete(1, None if label is None else (label,)), (matrix,))

    @property
    def n_points(self):
        return self.carrier.size

    @property
    def n_indices(self):
        return self.index.size

    def __getitem__(self, lam):
        return self.dist[lam]

    def is_single(self):
        return self.index.size == 1

    def restrict(self, points):
        """Sub-family on the listed carrier points (in the given order)."""
        points = list(points)
        labels = None
        if self.carrier.labels:
            labels = [self.carrier.labels[p] for p in points]
        sub = tuple(tuple(tuple(m[x][y] for y in points) for x in points) for m in self.dist)
        return PseudometricFamily(Carrier(len(points), labels), self.index, sub)


@dataclass(frozen=True)
class Flag:
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class FamilyReport:
    reflexive: Flag
    symmetric: Flag
    sufficient: Flag
    monotone: Flag
    triangular: Flag
    directed: Flag
    # per-index least dominating index for the triangle inequality
    triangular_map: Dict[int, int] = field(default_factory=dict)

    def all_hold(self):
        return all(f.holds for f in self.flags().values())

    def flags(self):
        return {
            "reflexive": self.reflexive,
            "symmetric": self.symmetric,
            "sufficient": self.sufficient,
            "monotone": self.monotone,
            "triangular": self.triangular,
            "directed": self.directed,
        }

    def failures(self):
        return [name for name, f in self.flags().items() if not f.holds]


def two_step(m):
    """``P[x][z] = min_y m[x][y] + m[y][z]``; the triangle bound through ``m``."""
    n = len(m)
    out = []
    for x in range(n):
        row = m[x]
        out.append(tuple(min(row[y] + m[y][z] for y in range(n)) for z in range(n)))
    return tuple(out)


def _triangle_failure(small, big, big_two_step):
    """First ``(x, z)`` where ``small[x][z]`` exceeds the two-step bound of ``big``."""
    n = len(small)
    for x in range(n):
        for z in range(n):
            if small[x][z] > big_two_step[x][z]:
                return (x, z)
    return None


def _triangle_triple(small, big, x, z):
    n = len(small)
    for y in range(n):
        if small[x][z] > big[x][y] + big[y][z]:
            return (x, y, z)
    return None


def validate_family(D: PseudometricFamily) -> FamilyReport:
    n = D.n_points
    k = D.n_indices
    idx = D.index

    reflexive = Flag(True)
    symmetric = Flag(True)
    for lam, m in enumerate(D.dist):
        for x in range(n):
            if m[x][x] != 0:
                if reflexive.holds:
                    reflexive = Flag(False, {"index": lam, "point": x})
            for y in range(x + 1, n):
                if m[x][y] != m[y][x] and symmetric.holds:
                    symmetric = Flag(False, {"index": lam, "pair": (x, y)})

    sufficient = Flag(True)
    for x, y in combinations(range(n), 2):
        if all(m[x][y] == 0 for m in D.dist):
            sufficient = Flag(False, {"pair": (x, y)})
            break

    monotone = Flag(True)
    for lam in range(k):
        if not monotone.holds:
            break
        for mu in idx.above(lam):
            a, b = D.dist[lam], D.dist[mu]
            bad = next(((x, y) for x in range(n) for y in range(n) if a[x][y] > b[x][y]), None)
            if bad is not None:
                monotone = Flag(False, {"lower": lam, "upper": mu, "pair": bad})
                break

    steps = [two_step(m) for m in D.dist]
    triangular = Flag(True)
    tri_map = {}
    for lam in range(k):
        for mu in idx.above(lam):
            if _triangle_failure(D.dist[lam], D.dist[mu], steps[mu]) is None:
                tri_map[lam] = mu
                break
        else:
            # report the triple that defeats the index itself
            x, z = _triangle_failure(D.dist[lam], D.dist[lam], steps[lam])
            triple = _triangle_triple(D.dist[lam], D.dist[lam], x, z)
            triangular = Flag(False, {"index": lam, "triple": triple})
            break
    if triangular.holds:
        triangular = Flag(True, dict(tri_map))

    w = idx.directedness_witness()
    directed = Flag(True) if w is None else Flag(False, {"pair": w})

    return FamilyReport(reflexive, symmetric, sufficient, monotone, triangular, directed,
                        tri_map if triangular.holds else {})


def require_valid(D, what="family"):
    report = validate_family(D)
    if not report.all_hold():
        raise PreconditionViolated(f"{what} fails: {', '.join(report.failures())}", report)
    return report


def sup_reduction(E: PseudometricFamily) -> PseudometricFamily:
    """Pointwise supremum over all indices, as a one-member family."""
    require_valid(E)
    n = E.n_points
    delta = tuple(tuple(max(m[x][y] for m in E.dist) for y in range(n)) for x in range(n))
    return PseudometricFamily.single(delta, E.carrier, label="sup")


@dataclass(frozen=True)
class ScalingMap:
    h: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(ext(v) for v in self.h))

    def __getitem__(self, lam):
        return self.h[lam]

    def __len__(self):
        return len(self.h)

    @classmethod
    def ones(cls, k):
        return cls((Fraction(1),) * k)


def check_scaling(h: ScalingMap, index: IndexPoset):
    if len(h) != index.size:
        raise InvalidScaling(f"scaling has {len(h)} entries for {index.size} indices", {"length": len(h)})
    for lam, v in enumerate(h.h):
        if v == INF or v <= 0:
            raise InvalidScaling(f"scaling at index {lam} is not a positive real: {v}", {"index": lam})
    for lam in range(index.size):
        for mu in index.above(lam):
            if h[lam] > h[mu]:
                raise InvalidScaling(
                    f"scaling not increasing: index {lam} <= {mu} but h={h[lam]} > {h[mu]}",
                    {"lower": lam, "upper": mu},
                )


def rescale(D: PseudometricFamily, h: ScalingMap) -> PseudometricFamily:
    """Member-wise product ``h(lambda) * d_lambda``."""
    check_scaling(h, D.index)
    require_valid(D)
    dist = tuple(
        tuple(tuple(h[lam] * v for v in row) for row in m) for lam, m in enumerate(D.dist)
    )
    return PseudometricFamily(D.carrier, D.index, dist)


def bmlo_witnesses(F: PseudometricFamily) -> Dict[int, Tuple[int, int]]:
    """For each generator ``i`` the least ``(j, k)`` with
    ``f_i(x, z) <= f_j(x, y) + f_k(y, z)`` for all triples."""
    n = F.n_points
    k = F.n_indices
    # mixed two-step bounds: P[j][k][x][z] = min_y f_j(x,y) + f_k(y,z)
    witnesses = {}
    cache = {}
    for i in range(k):
        fi = F.dist[i]
        found = None
        for j in range(k):
            for l in range(k):
                if (j, l) not in cache:
                    fj, fl = F.dist[j], F.dist[l]
                    cache[(j, l)] = [
                        [min(fj[x][y] + fl[y][z] for y in range(n)) for z in range(n)]
                        for x in range(n)
                    ]
                bound = cache[(j, l)]
                if all(fi[x][z] <= bound[x][z] for x in range(n) for z in range(n)):
                    found = (j, l)
                    break
            if found:
                break
        if found is None:
            raise NotITriangular(i)
        witnesses[i] = found
    return witnesses


def nonempty_subsets(k):
    """All nonempty subsets of ``range(k)``, by size then lexicographically."""
    return [c for r in range(1, k + 1) for c in combinations(range(k), r)]


def bmlo_to_fang(F: PseudometricFamily) -> PseudometricFamily:
    """Index the family by finite nonempty subsets of generators, taking sups."""
    bmlo_witnesses(F)
    n = F.n_points
    subsets = nonempty_subsets(F.n_indices)
    pos = {s: i for i, s in enumerate(subsets)}
    leq = [[set(a) <= set(b) for b in subsets] for a in subsets]
    labels = ["{" + ",".join(F.index.label(i) for i in s) + "}" for s in subsets]
    dist = []
    for s in subsets:
        if len(s) == 1:
            dist.append(F.dist[s[0]])
        else:
            dist.append(tuple(tuple(max(F.dist[i][x][y] for i in s) for y in range(n)) for x in range(n)))
    assert all(pos[(i,)] == i for i in range(F.n_indices))
    return PseudometricFamily(F.carrier, IndexPoset(len(subsets), leq, labels), tuple(dist))
