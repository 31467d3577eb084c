"""Constructive representations for a prescribed vertex order.

build_grounded_l places one L-shape per order position, choosing each
vertical by midpoint insertion into the ledger of depths already used;
build_mpt places bends on the line y = -x with half-integer extents.
Both build unconditionally: on an order that admits no representation the
output simply fails geometric verification (with spurious extra edges),
so both directions of the order characterizations are observable.
"""

from __future__ import annotations

from bisect import bisect_right, insort
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import (GROUNDED_L, GROUNDED_LJ, MPT, JShape, LShape,
                       MptLShape, Representation)
from .ljmodel import LjCertificate, certificate_edges, cover_sets
from .ordered import OrderedGraph

__all__ = ["DepthLedger", "build_grounded_l", "build_mpt", "realize_lj"]

HALF = Fraction(1, 2)
STUB = Fraction(2, 5)


@dataclass
class DepthLedger:
    """Depths already assigned, kept sorted; increasing = deeper."""

    depths: list = field(default_factory=list)

    def add(self, d: Fraction) -> None:
        if d <= 0 or d in self.depths:
            raise ValueError(f"ledger depths must be distinct and positive, got {d}")
        insort(self.depths, d)

    def shallower_than_all(self) -> Fraction:
        """Half the current minimum, or 1 on an empty ledger."""
        return self.depths[0] / 2 if self.depths else Fraction(1)

    def just_deeper_than(self, base: Fraction) -> Fraction:
        """Midpoint of base and the next strictly deeper entry (base+1 if none).

        No recorded horizontal lies strictly between base and the result,
        so a vertical of the returned depth crosses exactly the
        horizontals at depth <= base that pass under its abscissa.
        """
        idx = bisect_right(self.depths, base)
        if idx == len(self.depths):
            return base + 1
        return (base + self.depths[idx]) / 2


def build_grounded_l(og: OrderedGraph) -> Representation:
    """Left-to-right grounded-L construction for og's order.

    Position i gets anchor_x = i.  With no earlier neighbor the vertical
    is shorter than all previous ones; otherwise it is just deeper than
    the deepest earlier neighbor.  The horizontal runs to j + 1/2 where j
    is the last neighbor position (j = i when none).
    """
    n = og.n
    pos_edges = og.position_edges()
    ledger = DepthLedger()
    depth_at: dict[int, Fraction] = {}
    reach_at: dict[int, Fraction] = {}
    shapes = {}
    for i in range(1, n + 1):
        earlier = [j for j in range(1, i) if (j, i) in pos_edges]
        if not earlier:
            depth = ledger.shallower_than_all()
        else:
            p = max(earlier, key=lambda j: depth_at[j])
            depth = ledger.just_deeper_than(depth_at[p])
        for j in earlier:
            # construction invariant: an earlier neighbor's horizontal
            # already extends past this anchor
            assert reach_at[j] >= i + HALF
        later = [j for j in range(i + 1, n + 1) if (i, j) in pos_edges]
        j = max(later) if later else i
        reach = j + HALF
        ledger.add(depth)
        depth_at[i] = depth
        reach_at[i] = reach
        shapes[og.vertex_at(i)] = LShape(Fraction(i), depth, reach)
    return Representation(GROUNDED_L, shapes)


def build_mpt(og: OrderedGraph) -> Representation:
    """Bends at (i, -i) on y = -x; extents quantized to half-integers.

    Position i reaches right to (last right-neighbor position) + 1/2 and
    its vertical rises to -(first left-neighbor position - 1/2); with no
    such neighbor the position itself is used, giving stubs.
    """
    n = og.n
    pos_edges = og.position_edges()
    shapes = {}
    for i in range(1, n + 1):
        rights = [j for j in range(i + 1, n + 1) if (i, j) in pos_edges]
        lefts = [j for j in range(1, i) if (j, i) in pos_edges]
        reach = (max(rights) if rights else i) + HALF
        top = -((min(lefts) if lefts else i) - HALF)
        shapes[og.vertex_at(i)] = MptLShape(Fraction(i), reach, top)
    return Representation(MPT, shapes)


def realize_lj(cert: LjCertificate, og: OrderedGraph) -> Representation:
    """Turn an {L, J} feasibility certificate into geometry.

    Anchors sit at the order positions, depths are the integer ranks,
    and horizontals end at cutoff +- 1/2 (or at a 2/5 stub when the
    shape's horizontal covers nothing).
    """
    n = og.n
    if len(cert.types) != n:
        raise ValueError("certificate and ordered graph have different sizes")
    if certificate_edges(cert) != og.position_edges():
        raise ValueError("certificate inconsistent with the ordered graph")
    covers = cover_sets(cert)
    shapes = {}
    for i in range(1, n + 1):
        depth = Fraction(cert.depth_ranks[i - 1])
        anchor = Fraction(i)
        if cert.types[i - 1] == "L":
            reach = cert.cutoffs[i - 1] + HALF if covers[i - 1] else anchor + STUB
            shape = LShape(anchor, depth, reach)
        else:
            left = cert.cutoffs[i - 1] - HALF if covers[i - 1] else anchor - STUB
            shape = JShape(anchor, depth, left)
        shapes[og.vertex_at(i)] = shape
    return Representation(GROUNDED_LJ, shapes)
