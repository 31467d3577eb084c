from __future__ import annotations

import pytest

from groundedl import (Graph, LinearOrder, OrderedGraph, build_grounded_l,
                       concat_ordered, concat_representations, cycle_extension,
                       extend_lj_representation, find_pattern_occurrences,
                       gadget, induced_order, is_one_string, lj_feasible,
                       mirror_ordered, mirror_representation, realize_lj,
                       run_gadget_checks, search_completions, shape_crossings,
                       verify, GADGET_IDS, P2)
from conftest import natural


def _degrees(g: Graph) -> dict:
    deg = {v: 0 for v in range(1, g.n + 1)}
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


# ----------------------------------------------------------------------
# cycle_extension
# ----------------------------------------------------------------------

def test_cycle_extension_gadget(gadget_i):
    ext = cycle_extension(gadget_i, "single")
    assert ext.h.n == 24
    assert ext.g_vertices == (1, 2, 3, 4)
    # cycle vertices induce exactly the 20-cycle
    cyc = set(ext.cycle_vertices)
    cyc_edges = {e for e in ext.h.edges if e[0] in cyc and e[1] in cyc}
    assert len(cyc_edges) == 20
    deg = _degrees(ext.h)
    for j in ext.cycle_vertices:
        assert deg[j] in (2, 3, 4)
    for i in range(1, 5):
        nbrs_in_cycle = {v for e in ext.h.edges if i in e
                         for v in e if v != i and v in cyc}
        assert nbrs_in_cycle == {ext.cycle_id(5 * i)}
    # removing cycle vertices restores the (position-relabeled) core
    core_edges = {e for e in ext.h.edges if e[0] <= 4 and e[1] <= 4}
    assert core_edges == set(gadget_i.position_edges())


def test_cycle_extension_single_vertex():
    og = natural(Graph(1))
    ext = cycle_extension(og, "single")
    assert ext.h.n == 6
    assert ext.h.edges == frozenset(
        {(2, 3), (3, 4), (4, 5), (5, 6), (2, 6), (1, 6)})


def test_cycle_extension_double_mode():
    og = natural(Graph(2, frozenset({(1, 2)})))
    ext = cycle_extension(og, "double")
    x1_cycle = {v for e in ext.h.edges if 1 in e for v in e if v > 2}
    x2_cycle = {v for e in ext.h.edges if 2 in e for v in e if v > 2}
    assert x1_cycle == {ext.cycle_id(4), ext.cycle_id(5)}
    assert x2_cycle == {ext.cycle_id(9), ext.cycle_id(10)}


def test_cycle_extension_mode_vector(gadget_i):
    ext = cycle_extension(gadget_i, ("single", "double", "single", "single"))
    assert ext.attachment == ("single", "double", "single", "single")
    with pytest.raises(ValueError):
        cycle_extension(gadget_i, ("single",))
    with pytest.raises(ValueError):
        cycle_extension(gadget_i, "triple")


# ----------------------------------------------------------------------
# extend_lj_representation
# ----------------------------------------------------------------------

def _check_extension(rep, og):
    ext = cycle_extension(og, "single")
    out = extend_lj_representation(rep, og, ext)
    assert len(out.shapes) == 6 * og.n
    # originals preserved bit-exactly, keyed by order position
    for i in range(1, og.n + 1):
        assert out.shapes[i] is rep.shapes[og.vertex_at(i)]
    ind = induced_order(out)
    assert tuple(v for v in ind.perm if v <= og.n) == tuple(range(1, og.n + 1))
    assert verify(out, OrderedGraph(ext.h, ind)).ok
    assert is_one_string(out)
    return out


def test_extend_c4(c4_good):
    _check_extension(build_grounded_l(c4_good), c4_good)


def test_extend_gadget_lj_witness(gadget_i):
    cert = lj_feasible(gadget_i, ("L", "J"))
    _check_extension(realize_lj(cert, gadget_i), gadget_i)


def test_extend_single_vertex():
    og = natural(Graph(1))
    out = _check_extension(build_grounded_l(og), og)
    # the attachment shape crosses the original vertical, and that is its
    # only contact with the original shape
    pts = shape_crossings(out.shapes[1], out.shapes[1 + 5])
    assert len(pts) == 1 and pts[0][0] == 1
    for j in (1, 2, 3, 4):
        assert shape_crossings(out.shapes[1], out.shapes[1 + j]) == []


def test_extend_requires_verified_rep(c4_good, c4_natural):
    rep = build_grounded_l(c4_natural)  # fails verification (extra edge)
    ext = cycle_extension(c4_natural, "single")
    with pytest.raises(ValueError, match="does not verify"):
        extend_lj_representation(rep, c4_natural, ext)
    good = build_grounded_l(c4_good)
    with pytest.raises(ValueError, match="single"):
        extend_lj_representation(good, c4_good, cycle_extension(c4_good, "double"))


# ----------------------------------------------------------------------
# combinators and the separation pipeline
# ----------------------------------------------------------------------

def test_mirror_and_concat_ordered(gadget_i):
    m = mirror_ordered(gadget_i)
    assert m.order.perm == (4, 3, 2, 1)
    assert m.graph.edges == gadget_i.graph.edges
    gp = concat_ordered(gadget_i, m)
    assert gp.n == 8
    assert gp.order.perm == (1, 2, 3, 4, 8, 7, 6, 5)
    assert (5, 6) in gp.graph.edges and (5, 8) in gp.graph.edges


def test_mirror_and_concat_representations(gadget_i):
    cert = lj_feasible(gadget_i, ("L", "J"))
    rep = realize_lj(cert, gadget_i)
    mog = mirror_ordered(gadget_i)
    mrep = mirror_representation(rep)
    assert verify(mrep, mog).ok
    both = concat_representations(rep, mrep)
    assert verify(both, concat_ordered(gadget_i, mog)).ok


def test_separation_pipeline(gadget_i):
    """Doubled mirrored core: {L,J}-representable as ordered, yet its order
    contains the grounded-L obstruction; the cycle extension pins that order."""
    cert = lj_feasible(gadget_i, ("L", "J"))
    rep = realize_lj(cert, gadget_i)
    og_p = concat_ordered(gadget_i, mirror_ordered(gadget_i))
    rep_p = concat_representations(rep, mirror_representation(rep))
    og_pp = concat_ordered(og_p, og_p)
    rep_pp = concat_representations(rep_p, rep_p)
    assert verify(rep_pp, og_pp).ok
    assert find_pattern_occurrences(og_pp, P2, limit=1)
    ext = cycle_extension(og_pp, "single")
    assert ext.h.n == 96
    out = extend_lj_representation(rep_pp, og_pp, ext)
    assert verify(out, OrderedGraph(ext.h, induced_order(out))).ok
    assert is_one_string(out)
    record = gadget("T3I")
    assert any(not c.checked for c in record.claims)


# ----------------------------------------------------------------------
# gadget registry
# ----------------------------------------------------------------------

def test_gadget_t3i_data():
    rec = gadget("T3I")
    assert rec.known_edges == {(1, 2), (2, 3), (1, 4)}
    assert not rec.figure_dependent


def test_gadget_t3ii_data():
    rec = gadget("T3II")
    assert {(2, 3), (3, 6)} <= rec.known_nonedges
    assert {(1, 6), (1, 2), (2, 6), (1, 3)} <= rec.known_edges
    assert rec.figure_dependent


def test_gadget_t3iii_data():
    rec = gadget("T3III")
    assert rec.n == 7
    assert {(1, 7), (3, 7), (2, 4), (4, 6), (3, 4)} <= rec.known_edges


def test_gadget_unknown_id():
    with pytest.raises(ValueError):
        gadget("T3IV")


@pytest.mark.parametrize("gid", GADGET_IDS)
def test_gadget_checks_pass(gid):
    results = run_gadget_checks(gadget(gid))
    assert "checked-fail" not in results.values()
    assert any(v == "asserted-by-paper" for v in results.values())


def test_t3ii_completions_are_symmetric_and_infeasible():
    rec = gadget("T3II")
    completions = search_completions(rec, limit=3)
    assert completions
    for g in completions:
        flipped = {tuple(sorted((7 - u, 7 - v))) for u, v in g.edges}
        assert flipped == set(g.edges)
        og = OrderedGraph(g, rec.order)
        assert lj_feasible(og, ("L", "J")) is None


def test_t3iii_completions_avoid_mpt_pattern():
    from groundedl import avoids_patterns, MPT_PAT
    rec = gadget("T3III")
    completions = search_completions(rec, limit=3)
    assert completions
    for g in completions:
        assert avoids_patterns(OrderedGraph(g, rec.order), (MPT_PAT,))
