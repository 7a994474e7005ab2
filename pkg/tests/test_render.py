"""Rendering: golden files, determinism, well-formed SVG."""

import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from cellrw import render as rd
from cellrw.adjlib import build_presentation
from cellrw.adjlib import core as c

GOLDEN = Path(__file__).resolve().parent.parent / "src" / "cellrw" / "data" / "golden"
P = build_presentation("Adj41")

CASES = {
    "id_X.txt": lambda: rd.render(c.ID_X, P, "txt"),
    "eta.txt": lambda: rd.render(c.D_ETA, P, "txt"),
    "snake_l.txt": lambda: rd.render(c.SNAKE_L, P, "txt"),
    "SW_src_filmstrip.txt": lambda: rd.render(c.SW_SRC, P, "txt", slices=True),
    "eta.svg": lambda: rd.render(c.D_ETA, P, "svg"),
    "snake_l.svg": lambda: rd.render(c.SNAKE_L, P, "svg"),
}


@pytest.mark.parametrize("fname", sorted(CASES))
def test_golden(fname):
    assert CASES[fname]() == (GOLDEN / fname).read_bytes()


def test_deterministic():
    for fname, thunk in CASES.items():
        assert thunk() == thunk()


@pytest.mark.parametrize("d", [c.D_ETA, c.SNAKE_L, c.SW_SRC, c.SW2_SRC], ids=str)
def test_svg_well_formed(d):
    data = rd.render(d, P, "svg")
    root = ET.fromstring(data)
    assert root.tag.endswith("svg")


def test_eta_txt_shows_both_slices():
    text = rd.render(c.D_ETA, P, "txt").decode()
    assert "l r" in text and "id_X" in text and "eta" in text


def test_snake_txt_has_two_vertices():
    text = rd.render(c.SNAKE_L, P, "txt").decode()
    assert text.count("*") == 2  # one vertex row per atom
    assert "eta" in text and "eps" in text


def test_filmstrip_frame_count():
    text = rd.render(c.SW_SRC, P, "txt").decode()
    assert text.count("=== slice") == len(c.SW_SRC.atoms) + 1


def test_identity_strip_with_boundary_labels():
    out = rd.render(dg_identity(), P, "txt").decode()
    assert "id_X" in out


def dg_identity():
    from cellrw import diagram as dg

    return dg.identity_diagram(c.ID_X)


def test_dim5_unsupported():
    from cellrw import diagram as dg

    d5 = c.SW_SRC
    for _ in range(2):
        d5 = dg.identity_diagram(d5)
    with pytest.raises(rd.UnsupportedDimension):
        rd.render(d5, P, "txt")


def test_render_point():
    assert rd.render(c.X, P, "txt") == b"X\n"
