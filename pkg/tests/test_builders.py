from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

import pytest

from groundedl import (DepthLedger, Graph, LinearOrder, LjCertificate,
                       OrderedGraph, avoids_patterns, build_grounded_l,
                       build_mpt, induced_order, intersection_graph,
                       is_one_string, realize_lj, verify, MPT_PAT, P1, P2)
from conftest import all_graphs, natural

F = Fraction


# ----------------------------------------------------------------------
# depth ledger
# ----------------------------------------------------------------------

def test_ledger_shallower_and_midpoint():
    led = DepthLedger()
    assert led.shallower_than_all() == 1
    led.add(F(1))
    assert led.shallower_than_all() == F(1, 2)
    assert led.just_deeper_than(F(1)) == F(2)
    led.add(F(2))
    assert led.just_deeper_than(F(1)) == F(3, 2)
    with pytest.raises(ValueError):
        led.add(F(2))
    with pytest.raises(ValueError):
        led.add(F(0))


# ----------------------------------------------------------------------
# grounded-L builder
# ----------------------------------------------------------------------

def test_build_c4_worked_example(c4_good):
    rep = build_grounded_l(c4_good)
    by_pos = [rep.shapes[c4_good.vertex_at(i)] for i in range(1, 5)]
    assert [s.anchor_x for s in by_pos] == [1, 2, 3, 4]
    assert [s.depth for s in by_pos] == [1, 2, F(3, 2), 3]
    assert [s.reach for s in by_pos] == [F(7, 2), F(9, 2), F(9, 2), F(9, 2)]
    assert verify(rep, c4_good).ok


def test_build_single_vertex():
    og = natural(Graph(1))
    rep = build_grounded_l(og)
    shape = rep.shapes[1]
    assert (shape.anchor_x, shape.depth, shape.reach) == (1, 1, F(3, 2))
    assert verify(rep, og).ok


def test_build_gadget_spurious_edge(gadget_i):
    rep = build_grounded_l(gadget_i)
    by_pos = [rep.shapes[i] for i in range(1, 5)]
    assert [s.depth for s in by_pos] == [1, 2, 3, F(3, 2)]
    assert by_pos[0].reach == F(9, 2)
    report = verify(rep, gadget_i)
    assert not report.ok
    assert report.extra_edges == ((1, 3),)
    assert not report.missing_edges


def test_build_matches_pattern_avoidance_n4():
    for g in all_graphs(4):
        for perm in permutations(range(1, 5)):
            og = OrderedGraph(g, LinearOrder(perm))
            assert verify(build_grounded_l(og), og).ok == \
                avoids_patterns(og, (P1, P2))


def test_builder_reps_have_distinct_depths_and_right_order():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randint(1, 7)
        edges = frozenset((u, v) for u in range(1, n + 1)
                          for v in range(u + 1, n + 1) if rng.random() < 0.45)
        og = OrderedGraph(Graph(n, edges),
                          LinearOrder(tuple(rng.sample(range(1, n + 1), n))))
        rep = build_grounded_l(og)
        depths = [s.depth for s in rep.shapes.values()]
        assert len(set(depths)) == len(depths)
        assert all(d > 0 for d in depths)
        assert induced_order(rep) == og.order
        assert is_one_string(rep)


def test_intersection_graph_of_build_reproduces_input_when_avoiding():
    rng = random.Random(23)
    seen = 0
    while seen < 15:
        n = rng.randint(2, 6)
        edges = frozenset((u, v) for u in range(1, n + 1)
                          for v in range(u + 1, n + 1) if rng.random() < 0.4)
        og = OrderedGraph(Graph(n, edges),
                          LinearOrder(tuple(rng.sample(range(1, n + 1), n))))
        if not avoids_patterns(og, (P1, P2)):
            continue
        assert intersection_graph(build_grounded_l(og)).edges == edges
        seen += 1


# ----------------------------------------------------------------------
# MPT builder
# ----------------------------------------------------------------------

def test_build_mpt_c4_worked_example(c4_natural):
    rep = build_mpt(c4_natural)
    by_pos = [rep.shapes[i] for i in range(1, 5)]
    assert [s.bend_x for s in by_pos] == [1, 2, 3, 4]
    assert [s.reach for s in by_pos] == [F(9, 2), F(7, 2), F(9, 2), F(9, 2)]
    assert [s.top for s in by_pos] == [F(-1, 2), F(-1, 2), F(-3, 2), F(-1, 2)]
    assert verify(rep, c4_natural).ok


def test_build_mpt_single_vertex():
    og = natural(Graph(1))
    shape = build_mpt(og).shapes[1]
    assert (shape.bend_x, shape.reach, shape.top) == (1, F(3, 2), F(-1, 2))


def test_build_mpt_octahedron_never_verifies(k222):
    rng = random.Random(2)
    perms = [tuple(rng.sample(range(1, 7), 6)) for _ in range(20)]
    perms.append(tuple(range(1, 7)))
    for perm in perms:
        og = OrderedGraph(k222, LinearOrder(perm))
        assert not verify(build_mpt(og), og).ok


def test_build_mpt_matches_pattern_avoidance_n4():
    for g in all_graphs(4):
        for perm in permutations(range(1, 5)):
            og = OrderedGraph(g, LinearOrder(perm))
            assert verify(build_mpt(og), og).ok == avoids_patterns(og, (MPT_PAT,))


# ----------------------------------------------------------------------
# certificate realization
# ----------------------------------------------------------------------

def test_realize_gadget_certificate(gadget_i):
    cert = LjCertificate(("L", "L", "J", "L"), (2, 3, 1, 4), (4, 3, 2, 4))
    rep = realize_lj(cert, gadget_i)
    assert verify(rep, gadget_i).ok
    assert rep.shapes[3].tag == "J"


def test_realize_single_edge():
    og = natural(Graph(2, frozenset({(1, 2)})))
    cert = LjCertificate(("L", "L"), (1, 2), (2, 2))
    rep = realize_lj(cert, og)
    assert (rep.shapes[1].anchor_x, rep.shapes[1].depth, rep.shapes[1].reach) \
        == (1, 1, F(5, 2))
    assert (rep.shapes[2].anchor_x, rep.shapes[2].depth, rep.shapes[2].reach) \
        == (2, 2, F(12, 5))
    assert verify(rep, og).ok


def test_realize_empty_graph_stubs():
    og = natural(Graph(3))
    cert = LjCertificate(("L", "L", "L"), (3, 2, 1), (3, 3, 3))
    rep = realize_lj(cert, og)
    for i in range(1, 4):
        assert rep.shapes[i].reach == i + F(2, 5)
    assert intersection_graph(rep).edges == frozenset()
    assert verify(rep, og).ok


def test_realize_rejects_inconsistent_certificate(gadget_i):
    cert = LjCertificate(("L", "L", "L", "L"), (1, 2, 3, 4), (4, 4, 4, 4))
    with pytest.raises(ValueError, match="inconsistent"):
        realize_lj(cert, gadget_i)
