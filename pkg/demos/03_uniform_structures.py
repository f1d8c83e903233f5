"""
Entourages, sequences and compatibility
=======================================

On a finite carrier the uniform structure of a family is generated by finitely
many sublevel relations, and every sequence is eventually periodic. Limits and
Cauchy behaviour are then read off the cycle.
"""
from fangvp import (
    EventuallyPeriodicSeq,
    IndexPoset,
    Objective,
    PseudometricFamily,
    canonical_entourages,
    check_selfclosed,
    converges,
    family_order,
    is_cauchy,
    is_compatible,
    is_fundamental_system,
    maximal_transfer_check,
)
from fangvp.rational import format_ext

alpha = ((0, 1, 2), (1, 0, 1), (2, 1, 0))
family = PseudometricFamily(3, IndexPoset.chain(2), (alpha, tuple(tuple(2 * v for v in r) for r in alpha)))
phi = Objective((3, 1, 0))

V = canonical_entourages(family)
for label, member in zip(V.labels, V.members):
    print(f"{label}: {sorted(member)}")
print("fundamental system:", bool(is_fundamental_system(V)), "separated:", V.is_separated())

flip = EventuallyPeriodicSeq((), (0, 1))      # 0, 1, 0, 1, ...
settle = EventuallyPeriodicSeq((2, 0), (1,))  # 2, 0, 1, 1, 1, ...
print("0,1,0,1,... Cauchy:", bool(is_cauchy(flip, family)))
print("2,0,1,1,... converges to 1:", bool(converges(settle, 1, family)))

q = family_order(family, phi)
print("order closed under limits:", bool(check_selfclosed(q, family)))
v = is_compatible(V, q, phi)
print("compatible:", bool(v), "deltas:", [format_ext(d) for d in v.info["delta"]])
print("maximal-point transfer:", bool(maximal_transfer_check(q, phi, V)))
