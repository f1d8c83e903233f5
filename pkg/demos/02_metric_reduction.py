"""
From a family to one metric
===========================

The family order coincides with the order of a single metric, the pointwise
supremum of the members. Restricting that metric to the points below the start
gives a small metric problem whose answer certifies on the original family.
"""
import dataclasses
import random

from fangvp import (
    brondsted_order,
    ekeland_point,
    family_order,
    metric_reduction,
    sup_reduction,
    verify_certificate,
)
from fangvp.generators import random_fang_instance
from fangvp.rational import format_ext
from fangvp.variational import certificate_for

inst = dataclasses.replace(random_fang_instance(random.Random(5), n_max=6), scaling=None, start=0)
E, f = inst.family, inst.objective
print(f"{E.n_points} points, {E.n_indices} indices, objective {[format_ext(v) for v in f]}")

delta = sup_reduction(E)
same = family_order(E, f).rel == brondsted_order(delta, f).rel
print("family order equals the order of the supremum metric:", same)

sl = metric_reduction(inst)
print("slice below the start:", sl.points)

local = ekeland_point(sl.instance)
v = sl.lift(local.point)
print("point found on the slice:", v)
cert = certificate_for(inst, v, "fang")
print("certifies on the whole family:", bool(verify_certificate(inst, cert)))
