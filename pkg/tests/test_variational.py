import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fangvp import (
    KindMismatch,
    NotTransitive,
    Objective,
    PseudometricFamily,
    QuasiOrder,
    ScalingMap,
    VariationalInstance,
    brondsted_order,
    ekeland_point,
    family_order,
    fang_point,
    gap_compatibility,
    hamel_point,
    metric_reduction,
    rescale,
    sup_reduction,
    up_set,
    verify_certificate,
)
from fangvp.generators import random_fang_instance, random_metric_instance
from fangvp.variational import solve_by_reduction

from conftest import D_ALPHA
from oracles import brondsted_by_definition, ekeland_points, order_by_definition

ID2 = ((0, 1), (1, 0))


def rel(n, pairs):
    return QuasiOrder.from_pairs(n, list(pairs) + [(x, x) for x in range(n)]).rel


def test_brondsted_examples(ex1_alpha, ex1_phi):
    assert brondsted_order(ex1_alpha, ex1_phi).rel == rel(3, [(0, 1), (1, 2), (0, 2)])
    assert brondsted_order(ex1_alpha, Objective.constant(3, 4)).rel == rel(3, [])
    assert brondsted_order(PseudometricFamily.single(ID2), Objective((1, 0))).rel == rel(2, [(0, 1)])


def test_brondsted_needs_triangle():
    d = PseudometricFamily.single(((0, 1, 5), (1, 0, 1), (5, 1, 0)))
    with pytest.raises(NotTransitive) as exc:
        brondsted_order(d, Objective((2, 1, 0)))
    assert exc.value.triple == (0, 1, 2)


def test_family_order_examples(ex1_family, ex1_alpha, ex1_phi):
    assert family_order(ex1_family, ex1_phi).rel == rel(3, [(0, 1)])
    assert family_order(ex1_alpha, ex1_phi) == brondsted_order(ex1_alpha, ex1_phi)
    h = ScalingMap((1, 2))
    direct = [[all(h[l] * ex1_family.dist[l][x][y] <= ex1_phi[x] - ex1_phi[y] for l in range(2))
               for y in range(3)] for x in range(3)]
    assert family_order(rescale(ex1_family, h), ex1_phi).rel == tuple(map(tuple, direct))


def test_fang_point_ex1(ex1_family, ex1_phi):
    inst = VariationalInstance(ex1_family, ex1_phi, None, 0)
    c = fang_point(inst)
    assert c.point == 1
    assert ekeland_points(ex1_family.dist, ex1_phi, 0) == {1}
    w = {r.x: r for r in c.clause2}
    assert w[2].index == 1 and (w[2].lhs, w[2].rhs) == (2, 1)
    assert [(r.lhs, r.rhs) for r in c.clause1] == [(1, 2), (2, 2)]


def test_fang_point_at_maximal_start(ex1_family, ex1_phi):
    for u in (1, 2):
        assert fang_point(VariationalInstance(ex1_family, ex1_phi, None, u)).point == u


def test_fang_point_single_index(ex1_alpha, ex1_phi):
    c = fang_point(VariationalInstance(ex1_alpha, ex1_phi, None, 0))
    assert c.point == 2
    assert all(r.rhs < 0 for r in c.clause2)


def test_hamel_point_ex1(ex1_instance):
    # e_beta(0, 1) = 2 * d_beta(0, 1) = 4 exceeds the drop 2, so 0 is already maximal
    assert ekeland_points(rescale(ex1_instance.family, ex1_instance.scaling).dist,
                          ex1_instance.objective, 0) == {0}
    c = hamel_point(ex1_instance)
    assert c.point == 0 and c.kind == "hamel"
    assert verify_certificate(ex1_instance, c)


def test_hamel_with_unit_scaling_matches_fang(ex1_family, ex1_phi):
    inst = VariationalInstance(ex1_family, ex1_phi, ScalingMap.ones(2), 0)
    h = hamel_point(inst)
    f = fang_point(inst)
    assert dataclasses.replace(h, kind="fang") == f


def test_hamel_one_point():
    inst = VariationalInstance(PseudometricFamily.single(((0,),)), Objective((5,)), ScalingMap((3,)), 0)
    c = hamel_point(inst)
    assert c.point == 0 and c.clause2 == () and c.clause1[0].lhs == 0
    assert verify_certificate(inst, c)


def test_hamel_requires_scaling(ex1_family, ex1_phi):
    with pytest.raises(KindMismatch):
        hamel_point(VariationalInstance(ex1_family, ex1_phi, None, 0))


def test_ekeland_examples(ex1_alpha, ex1_phi, ex1_family):
    c = ekeland_point(VariationalInstance(ex1_alpha, ex1_phi, None, 0))
    assert c.point == 2 and (c.clause1[0].lhs, c.clause1[0].rhs) == (2, 3)
    for u in range(3):
        assert ekeland_point(VariationalInstance(ex1_alpha, Objective.constant(3), None, u)).point == u
    assert ekeland_point(VariationalInstance(ex1_alpha, ex1_phi, None, 2)).point == 2
    with pytest.raises(KindMismatch):
        ekeland_point(VariationalInstance(ex1_family, ex1_phi, None, 0))


def test_verify_certificate(ex1_family, ex1_phi):
    inst = VariationalInstance(ex1_family, ex1_phi, None, 0)
    c = fang_point(inst)
    assert verify_certificate(inst, c)
    v = verify_certificate(inst, dataclasses.replace(c, point=0))
    assert not v and v.witness == {"clause": 2, "x": 1}
    # a recorded witness that is not strict
    bad = dataclasses.replace(c, clause2=(dataclasses.replace(c.clause2[1], index=0, lhs=Fraction(1)), c.clause2[0]))
    assert not verify_certificate(inst, bad)
    short = dataclasses.replace(c, clause2=c.clause2[:1])
    assert verify_certificate(inst, short).witness["check"] == "clause2 coverage"
    one = VariationalInstance(PseudometricFamily.single(((0,),)), Objective((1,)), None, 0)
    assert verify_certificate(one, fang_point(one))


def test_metric_reduction_ex1(ex1_family, ex1_phi, ex1_alpha):
    sl = metric_reduction(VariationalInstance(ex1_family, ex1_phi, None, 0))
    assert sl.points == (0, 1)
    assert sl.instance.family.dist[0] == ((0, 2), (2, 0))
    assert sl.instance.start == 0
    # 2 is the strict minimiser; nothing lies below it
    assert metric_reduction(VariationalInstance(ex1_family, ex1_phi, None, 2)).points == (2,)
    sl = metric_reduction(VariationalInstance(ex1_alpha, ex1_phi, None, 1))
    assert sl.points == tuple(x for x in range(3) if D_ALPHA[1][x] <= ex1_phi[1] - ex1_phi[x])


def test_gap_compatibility(ex1_family, ex1_phi):
    assert gap_compatibility(ex1_family, ex1_phi)
    assert gap_compatibility(ex1_family, ex1_phi, QuasiOrder.identity(3))
    hand = QuasiOrder.from_pairs(3, [(0, 0), (1, 1), (2, 2), (1, 2)])
    v = gap_compatibility(ex1_family, ex1_phi, hand)
    assert not v
    w = v.witness
    # the witness delta really separates: gap below delta, distance not below it
    gap = ex1_phi[1] - ex1_phi[2]
    assert w["pair"] == (1, 2) and gap < w["delta"] <= w["distance"]


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_orders_match_definitions(rng):
    inst = random_fang_instance(rng, n_max=6)
    E, f = inst.family, inst.objective
    assert family_order(E, f).rel == tuple(map(tuple, order_by_definition(E.dist, f)))
    delta = sup_reduction(E)
    assert brondsted_order(delta, f).rel == tuple(map(tuple, brondsted_by_definition(delta.dist[0], f)))
    assert family_order(E, f).rel == brondsted_order(delta, f).rel
    assert family_order(E, f).is_antisymmetric()


@settings(max_examples=150, deadline=None)
@given(st.randoms(use_true_random=False))
def test_larger_scaling_gives_subrelation(rng):
    inst = random_fang_instance(rng, n_max=6)
    D, f, h = inst.family, inst.objective, inst.scaling
    bigger = ScalingMap(tuple(2 * v for v in h.h))
    small = family_order(rescale(D, h), f).rel
    large = family_order(rescale(D, bigger), f).rel
    n = D.n_points
    assert all(small[x][y] or not large[x][y] for x in range(n) for y in range(n))
    assert family_order(rescale(D, ScalingMap.ones(D.n_indices)), f) == family_order(D, f)


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_solutions_are_certified_and_maximal(rng):
    inst = random_fang_instance(rng, n_max=6)
    for solver, E in ((fang_point, inst.family), (hamel_point, rescale(inst.family, inst.scaling))):
        c = solver(inst)
        assert verify_certificate(inst, c)
        assert c.point in ekeland_points(E.dist, inst.objective, inst.start)
        assert inst.objective[inst.start] >= inst.objective[c.point]
        assert up_set(c.order_used, c.point) == {c.point}
    m = random_metric_instance(rng, n_max=6)
    c = ekeland_point(m)
    assert verify_certificate(m, c)
    assert up_set(c.order_used, c.point) == {c.point}


@settings(max_examples=150, deadline=None)
@given(st.randoms(use_true_random=False))
def test_reduction_certifies_on_original(rng):
    inst = random_fang_instance(rng, n_max=6)
    for i in (inst, dataclasses.replace(inst, scaling=None)):
        sl = metric_reduction(i)
        assert i.start in sl.points
        assert verify_certificate(i, solve_by_reduction(i))
