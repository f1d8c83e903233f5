"""
Variational points of a two-level pseudometric family
=====================================================

Three points on a line with a fine distance ``alpha`` and a coarse distance
``beta = 2 alpha``, and an objective that falls from left to right.
"""
from fangvp import (
    IndexPoset,
    Objective,
    PseudometricFamily,
    ScalingMap,
    VariationalInstance,
    fang_point,
    family_order,
    hamel_point,
    validate_family,
    verify_certificate,
)

alpha = ((0, 1, 2), (1, 0, 1), (2, 1, 0))
beta = tuple(tuple(2 * v for v in row) for row in alpha)
family = PseudometricFamily(3, IndexPoset.chain(2, ["alpha", "beta"]), (alpha, beta))
phi = Objective((3, 1, 0))

# Every axiom holds; the triangular map sends each index to itself.
report = validate_family(family)
print("family valid:", report.all_hold(), "triangular map:", report.triangular.witness)

# x <= y when every member distance fits under the drop phi(x) - phi(y).
order = family_order(family, phi)
print("strict pairs of the order:", [p for p in order.pairs() if p[0] != p[1]])

# Starting at 0 the walk stops at 1: going on to 2 costs beta(1, 2) = 2 for a drop of 1.
inst = VariationalInstance(family, phi, start=0)
cert = fang_point(inst)
print("fang point from 0:", cert.point)
for rec in cert.clause2:
    print(f"  x={rec.x} blocked by index {rec.index}: {rec.lhs} > {rec.rhs}")
print("certificate verifies:", bool(verify_certificate(inst, cert)))

# Doubling the coarse member makes every move too expensive.
scaled = VariationalInstance(family, phi, ScalingMap((1, 2)), 0)
cert = hamel_point(scaled)
print("hamel point from 0 with h = (1, 2):", cert.point, bool(verify_certificate(scaled, cert)))
