from __future__ import annotations

import random

import pytest

from f1gtheory.groups import all_subgroups, build_group
from f1gtheory.mackey import (check_double_coset, check_frobenius, conjugate,
                              double_coset_reps, green_morphism_check, induce,
                              linear_dimension, restrict, subgroup_context,
                              transport)
from f1gtheory.sampling import random_element

from conftest import ring_of


def context_for(group, order, pick=0):
    matches = [s for s in all_subgroups(group) if s.order == order]
    return subgroup_context(group, matches[pick].elements)


def test_restrict_coset_to_its_own_subgroup():
    group = build_group(name="S3")
    ring = ring_of("S3")
    ctx = context_for(group, 2)
    # class index 1 is the order-2 class; S3/C2 restricted to C2 is a fixed
    # point plus a free orbit
    x = ring.basis_element(1)
    restricted = restrict(ctx, x)
    assert restricted.coeffs == (1, 1)


def test_restrict_free_orbit():
    group = build_group(name="C4")
    ring = ring_of("C4")
    ctx = context_for(group, 2)
    free = ring.basis_element(0)
    assert restrict(ctx, free).coeffs == (2, 0)


def test_induce_unit_gives_coset_class():
    group = build_group(name="S3")
    ring = ring_of("S3")
    for order, class_index in ((2, 1), (3, 2)):
        ctx = context_for(group, order)
        induced = induce(ctx, ctx.ring.one())
        assert induced == ring.basis_element(class_index)


def test_induce_free_orbit_gives_free_orbit():
    group = build_group(name="Q8")
    ring = ring_of("Q8")
    ctx = context_for(group, 4)
    sub_free = ctx.ring.basis_element(0)
    assert induce(ctx, sub_free) == ring.basis_element(0)


def test_restriction_is_linear():
    group = build_group(name="D4")
    ring = ring_of("D4")
    ctx = context_for(group, 4)
    rng = random.Random(2)
    for _ in range(10):
        x = random_element(ring, rng)
        y = random_element(ring, rng)
        assert restrict(ctx, x + y) == restrict(ctx, x) + restrict(ctx, y)
        assert restrict(ctx, ctx.ambient_ring.one()) == ctx.ring.one()


def test_restriction_is_a_ring_map():
    group = build_group(name="D4")
    ctx = context_for(group, 4)
    ring = ring_of("D4")
    rng = random.Random(5)
    for _ in range(10):
        x = random_element(ring, rng)
        y = random_element(ring, rng)
        assert restrict(ctx, x * y) == ctx.ring.mul(restrict(ctx, x),
                                                    restrict(ctx, y))


def test_frobenius_c4_example():
    group = build_group(name="C4")
    ring = ring_of("C4")
    sub = next(s for s in all_subgroups(group) if s.order == 2)
    ctx = subgroup_context(group, sub.elements)
    x = ring.basis_element(0)
    y = ctx.ring.one()
    lhs = induce(ctx, ctx.ring.mul(restrict(ctx, x), y))
    rhs = ring.mul(x, induce(ctx, y))
    assert lhs == rhs
    assert lhs.coeffs == (2, 0, 0)


def test_frobenius_random_instances():
    rng = random.Random(31)
    for name in ("S3", "D4"):
        group = build_group(name=name)
        ring = ring_of(name)
        subs = all_subgroups(group)
        for _ in range(25):
            h = subs[rng.randrange(len(subs))]
            ctx = subgroup_context(group, h.elements)
            x = random_element(ring, rng)
            y = random_element(ctx.ring, rng)
            report = check_frobenius(group, h.elements, x, y)
            assert report.ok, (name, h.elements, x.coeffs, y.coeffs)


def test_double_coset_reps_count():
    group = build_group(name="S3")
    c2 = next(s for s in all_subgroups(group) if s.order == 2)
    reps = double_coset_reps(group, c2.elements, c2.elements)
    assert len(reps) == 2
    assert reps[0] == 0


def test_double_coset_formula_spot():
    group = build_group(name="D4")
    subs = all_subgroups(group)
    h = next(s for s in subs if s.order == 2)
    k = next(s for s in subs if s.order == 4)
    ctx = subgroup_context(group, h.elements)
    for i in range(ctx.ring.rank):
        report = check_double_coset(group, h.elements, k.elements,
                                    ctx.ring.basis_element(i))
        assert report.ok
        assert report.lhs == report.rhs


def test_double_coset_full_s3():
    group = build_group(name="S3")
    subs = all_subgroups(group)
    for h in subs:
        ctx = subgroup_context(group, h.elements)
        for k in subs:
            for i in range(ctx.ring.rank):
                report = check_double_coset(group, h.elements, k.elements,
                                            ctx.ring.basis_element(i))
                assert report.ok


def test_conjugate_preserves_dimension():
    group = build_group(name="D4")
    sub = next(s for s in all_subgroups(group) if s.order == 2 and 0 in s.elements)
    ctx = subgroup_context(group, sub.elements)
    rng = random.Random(8)
    for g in range(group.order):
        y = random_element(ctx.ring, rng)
        new_ctx, moved = conjugate(g, ctx, y)
        assert linear_dimension(moved) == linear_dimension(y)


def test_transport_requires_matching_rings():
    group = build_group(name="C4")
    sub = next(s for s in all_subgroups(group) if s.order == 2)
    ctx = subgroup_context(group, sub.elements)
    ident = tuple(range(ctx.group.order))
    y = ctx.ring.basis_element(0)
    assert transport(ctx.ring, ctx.ring, ident, y) == y


def test_green_morphism_check():
    for name in ("C4", "S3", "D4"):
        report = green_morphism_check(build_group(name=name))
        assert report.passed, name


def test_induction_transitivity():
    # ind_G_H y = ind_G_K (ind_K_H y) for H <= K <= G inside C4
    group = build_group(name="C4")
    ring = ring_of("C4")
    k_sub = next(s for s in all_subgroups(group) if s.order == 2)
    k_ctx = subgroup_context(group, k_sub.elements)
    h_in_k = subgroup_context(k_ctx.group, (0,))
    full = subgroup_context(group, (0,))
    y = full.ring.one()
    via_k = induce(k_ctx, induce(h_in_k, h_in_k.ring.one()))
    direct = induce(full, y)
    assert via_k == direct
