"""Exact feasibility oracles for fixed vertex orders and class recognition.

lj_feasible decides, by exhaustive search over type vectors and depth
rankings, whether an ordered graph has a grounded {L, J} representation
inducing exactly its order; the continuous question is reduced to the
finite combinatorial model in ljmodel.  recognize drives the order
search for a whole class.  seg_witness_search is a randomized,
explicitly incomplete witness finder for grounded segments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .builders import build_grounded_l, build_mpt, realize_lj
from .geometry import GROUNDED_SEG, Representation, SegmentShape, verify
from .ljmodel import LjCertificate, greedy_cutoffs
from .ordered import (INT_PAT, MPT_PAT, P1, P2, Graph, LinearOrder,
                      OrderedGraph, SearchBoundExceeded, canonical_order_key,
                      enumerate_avoiding_orders)

__all__ = [
    "LjCertificate",
    "RecognitionResult",
    "lj_feasible",
    "recognize",
    "seg_witness_search",
    "CLASS_GROUNDED_L",
    "CLASS_MPT",
    "CLASS_INTERVAL",
    "CLASS_GROUNDED_LJ",
]

CLASS_GROUNDED_L = "GROUNDED_L"
CLASS_MPT = "MPT"
CLASS_INTERVAL = "INTERVAL"
CLASS_GROUNDED_LJ = "GROUNDED_LJ"

_TYPE_ORDER = {"L": 0, "J": 1}


@dataclass(frozen=True)
class RecognitionResult:
    """Outcome of class recognition; membership always carries a witness."""

    member: bool
    order: LinearOrder | None = None
    representation: Representation | None = None
    budget_exhausted: bool = False


def _edge_routes(types, pos_edges, n: int):
    """Per edge, the rank-inequality routes its coverage may take.

    A route is a tuple of (a, b) pairs meaning rank_a < rank_b.  Edge
    (i, j) can be covered by i's rightward horizontal (needs type_i = L,
    rank_i < rank_j, and every skipped non-neighbor shallower than i) or
    by j's leftward horizontal (symmetric).  Returns None if some edge
    has no route at all.
    """
    routes_per_edge = []
    for i, j in sorted(pos_edges):
        routes = []
        if types[i - 1] == "L":
            route = [(i, j)]
            route += [(k, i) for k in range(i + 1, j) if (i, k) not in pos_edges]
            routes.append(tuple(route))
        if types[j - 1] == "J":
            route = [(j, i)]
            route += [(k, j) for k in range(i + 1, j) if (k, j) not in pos_edges]
            routes.append(tuple(route))
        if not routes:
            return None
        routes_per_edge.append(tuple(routes))
    return routes_per_edge


def _fixed_constraints_acyclic(routes_per_edge, n: int) -> bool:
    """Cheap pruning: single-route edges impose fixed inequalities; a
    cycle among them rules the type vector out before any rank search."""
    arcs: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for routes in routes_per_edge:
        if len(routes) == 1:
            for a, b in routes[0]:
                arcs[a].add(b)
    state = {}  # 0 = visiting, 1 = done

    def dfs(u: int) -> bool:
        state[u] = 0
        for w in arcs[u]:
            if state.get(w) == 0:
                return False
            if w not in state and not dfs(w):
                return False
        state[u] = 1
        return True

    return all(dfs(u) for u in arcs if u not in state)


def _lex_min_ranks(n: int, routes_per_edge):
    """Lexicographically least rank vector satisfying every edge, or None."""
    rank = [0] * (n + 1)  # 0 = unassigned
    used = [False] * (n + 1)

    def alive(routes) -> bool:
        for route in routes:
            for a, b in route:
                ra, rb = rank[a], rank[b]
                if ra and rb and ra > rb:
                    break
            else:
                return True
        return False

    def bt(pos: int) -> bool:
        if pos > n:
            return True
        for v in range(1, n + 1):
            if used[v]:
                continue
            rank[pos] = v
            used[v] = True
            if all(alive(r) for r in routes_per_edge) and bt(pos + 1):
                return True
            rank[pos] = 0
            used[v] = False
        return False

    if bt(1):
        return tuple(rank[1:])
    return None


def lj_feasible(og: OrderedGraph, allowed=("L", "J"),
                search_bound: int = 9) -> LjCertificate | None:
    """First certificate, by (type vector, rank vector) lexicographic order
    with L before J, for a grounded {L, J} representation inducing og's
    order; None when no such representation exists.
    """
    if not allowed or set(allowed) - {"L", "J"}:
        raise ValueError("allowed types must be a nonempty subset of {L, J}")
    allowed = sorted(set(allowed), key=_TYPE_ORDER.__getitem__)
    n = og.n
    if n > search_bound:
        raise SearchBoundExceeded(f"graph order {n} exceeds bound {search_bound}")
    pos_edges = og.position_edges()
    for types in product(allowed, repeat=n):
        routes = _edge_routes(types, pos_edges, n)
        if routes is None:
            continue
        if not _fixed_constraints_acyclic(routes, n):
            continue
        ranks = _lex_min_ranks(n, routes)
        if ranks is not None:
            cuts = greedy_cutoffs(types, ranks, pos_edges, n)
            return LjCertificate(types, ranks, cuts)
    return None


def _dedup_orders(n: int):
    """One order per shift/reversal equivalence class, lexicographically."""
    seen = set()
    for perm in permutations(range(1, n + 1)):
        key = canonical_order_key(perm)
        if key in seen:
            continue
        seen.add(key)
        yield perm


def recognize(g: Graph, class_id: str, budget: int | None = None,
              search_bound: int = 9) -> RecognitionResult:
    """Decide class membership by searching vertex orders.

    Pattern-characterized classes enumerate avoiding orders and, where a
    geometric builder exists, verify the built witness.  GROUNDED_LJ runs
    the feasibility oracle on one order per equivalence class (membership
    is invariant under shifts and reversal of the induced order); budget
    caps the number of classes tried and exhaustion is reported, not
    thrown.
    """
    if class_id in (CLASS_GROUNDED_L, CLASS_MPT, CLASS_INTERVAL):
        patterns = {CLASS_GROUNDED_L: (P1, P2), CLASS_MPT: (MPT_PAT,),
                    CLASS_INTERVAL: (INT_PAT,)}[class_id]
        found = enumerate_avoiding_orders(g, patterns, limit=1,
                                          search_bound=search_bound)
        if not found:
            return RecognitionResult(member=False)
        order = found[0]
        og = OrderedGraph(g, order)
        if class_id == CLASS_INTERVAL:
            # no geometric interval builder; the avoiding order is the witness
            return RecognitionResult(member=True, order=order)
        rep = build_grounded_l(og) if class_id == CLASS_GROUNDED_L else build_mpt(og)
        report = verify(rep, og)
        if not report.ok:
            raise AssertionError(f"builder output failed verification: {report}")
        return RecognitionResult(member=True, order=order, representation=rep)

    if class_id == CLASS_GROUNDED_LJ:
        tried = 0
        for perm in _dedup_orders(g.n):
            if budget is not None and tried >= budget:
                return RecognitionResult(member=False, budget_exhausted=True)
            tried += 1
            og = OrderedGraph(g, LinearOrder(perm))
            cert = lj_feasible(og, ("L", "J"), search_bound=search_bound)
            if cert is not None:
                rep = realize_lj(cert, og)
                report = verify(rep, og)
                if not report.ok:
                    raise AssertionError(f"certificate realization failed: {report}")
                return RecognitionResult(member=True, order=og.order,
                                         representation=rep)
        return RecognitionResult(member=False)

    raise ValueError(f"unknown class id {class_id!r}")


def seg_witness_search(og: OrderedGraph, trials: int = 1000,
                       seed: int = 0) -> Representation | None:
    """Randomized grounded-segment witness search for og's order.

    Samples tips from slope/length grids with rational perturbations at
    the prescribed anchors and returns the first representation passing
    verification.  Absence of a witness proves nothing: the search is
    incomplete by design and never claims non-representability.
    """
    n = og.n
    rng = random.Random(seed)
    span = n + 1
    dx_grid = [Fraction(k, 2) for k in range(-2 * span, 2 * span + 1)]
    dy_grid = [Fraction(k, 2) for k in range(1, 2 * span + 1)]
    for _ in range(trials):
        shapes = {}
        for i in range(1, n + 1):
            dx = rng.choice(dx_grid) + Fraction(rng.randint(-18, 18), 37)
            dy = rng.choice(dy_grid) + Fraction(rng.randint(0, 40), 41)
            shapes[og.vertex_at(i)] = SegmentShape(Fraction(i), i + dx, -dy)
        try:
            rep = Representation(GROUNDED_SEG, shapes)
        except ValueError:
            continue
        report = verify(rep, og)
        if report.ok:
            return rep
    return None
