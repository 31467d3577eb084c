from __future__ import annotations

import hashlib

from groundedl import (Representation, GROUNDED_L, build_grounded_l, build_mpt,
                       lj_feasible, realize_lj, render_svg)
from conftest import natural


def test_gadget_witness_svg_snapshot(gadget_i):
    cert = lj_feasible(gadget_i, ("L", "J"))
    rep = realize_lj(cert, gadget_i)
    svg = render_svg(rep, labels=True)
    assert svg == render_svg(rep, labels=True)
    assert hashlib.sha256(svg.encode()).hexdigest() == \
        "871932bd6081cdeba543d0e8e6275d1f8f3440b2e3815adf10130a7c66e18bbc"
    assert svg.count('<polyline class="shape"') == 4
    assert '<line class="axis"' in svg
    assert svg.count('<text class="label"') == 4


def test_mpt_svg_has_bend_line(c4_natural):
    svg = render_svg(build_mpt(c4_natural))
    assert hashlib.sha256(svg.encode()).hexdigest() == \
        "875e7bb1589268284b7516ed5d481ad99b1c67b659ec1d3f2c58c202d3abfd27"
    assert '<line class="bend-line"' in svg
    assert svg.count('<polyline class="shape"') == 4
    assert '<text' not in svg


def test_empty_rep_axis_only():
    svg = render_svg(Representation(GROUNDED_L, {}))
    assert '<line class="axis"' in svg
    assert "polyline" not in svg


def test_scale_option(c4_good):
    rep = build_grounded_l(c4_good)
    svg = render_svg(rep, scale=50)
    assert svg == render_svg(rep, scale=50)
    assert 'width="225"' in svg  # 4.5 units wide (0.5 .. 5, padded) at 50 px/unit
