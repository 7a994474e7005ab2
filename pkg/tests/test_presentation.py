"""Computad construction, the free globes, skeleta, hypothesis extension."""

import pytest

from cellrw import diagram as dg
from cellrw import presentation as pr
from cellrw.adjlib import build_presentation
from cellrw.adjlib import core as c
from cellrw.diagram import Atom, Diagram
from cellrw.presentation import GeneratorCell, Relation


def test_new_presentation_range():
    assert pr.new_presentation(4).n == 4
    assert pr.new_presentation(2).n == 2
    with pytest.raises(pr.DimensionOverflow):
        pr.new_presentation(7)
    with pytest.raises(pr.DimensionOverflow):
        pr.new_presentation(0)


def test_add_generator_value_semantics():
    p = pr.new_presentation(4)
    q = pr.add_generator(p, 0, "X")
    assert not p.has_cell("X") and q.has_cell("X")


def test_add_generator_errors():
    p = pr.new_presentation(4)
    p = pr.add_generator(p, 0, "X")
    with pytest.raises(pr.DuplicateName):
        pr.add_generator(p, 0, "X")
    with pytest.raises(pr.InvalidBoundary):
        # eta before l exists: boundary references an unknown cell
        pr.add_generator(
            p, 1, "f", c.X, dg.point("Nowhere")
        )
    p = pr.add_generator(p, 0, "Y")
    p = pr.add_generator(p, 1, "l", c.X, c.Y)
    with pytest.raises(pr.GlobularityFailure):
        # 2-cell whose sides have different boundaries
        pr.add_generator(
            p, 2, "bad",
            Diagram(1, source=c.X, atoms=(Atom("l", ()),)),
            Diagram(1, source=c.X),
        )


def test_add_relation_errors():
    p = build_presentation("Adj31")
    with pytest.raises(pr.DimensionMismatch):
        pr.add_relation(p, "low", c.SNAKE_L, c.SNAKE_L)
    # degenerate but legal relation
    q = pr.add_relation(p, "degenerate", c.ID_SNAKE_L, c.ID_SNAKE_L)
    assert q.has_relation("degenerate")
    with pytest.raises(pr.BoundaryMismatch):
        pr.add_relation(p, "bm", c.ID_SNAKE_L, c.ID3_L)
    with pytest.raises(pr.DuplicateName):
        pr.add_relation(p, "SW_rel", c.ID_SNAKE_L, c.ID_SNAKE_L)


@pytest.mark.parametrize("k", range(5))
def test_theta_counts(k):
    t = pr.theta(k)
    counts = t.cell_counts()
    assert counts.get(k) == 1
    for j in range(k):
        assert counts[j] == 2
    assert not t.relations
    assert pr.validate_presentation(t).ok


def test_skeleton():
    p = build_presentation("Adj41")
    sk3 = pr.skeleton(p, 3)
    assert sk3.cell_counts() == {0: 2, 1: 2, 2: 2, 3: 4}
    assert not sk3.relations
    assert pr.skeleton(p, 4) == p
    # a 1-truncated free 2-globe: top dimension 1 (two parallel 1-cells)
    sk = pr.skeleton(pr.theta(2), 1)
    assert sk.n == 1 and sk.cell_counts() == {0: 2, 1: 2}


def test_skeleton_idempotence():
    p = build_presentation("Adj41")
    for j in range(1, 5):
        for k in range(1, 5):
            m = min(j, k)
            if k <= pr.skeleton(p, j).n:
                assert pr.skeleton(pr.skeleton(p, j), k) == pr.skeleton(p, m)


def test_extend_with_hypotheses():
    p = build_presentation("Adj41")
    q = pr.extend_with_hypotheses(p)
    assert q == p
    ext = pr.extend_with_hypotheses(
        p,
        [GeneratorCell("SW_G", 4, c.SW_SRC, c.ID_D_ETA),
         GeneratorCell("SW_G_inv", 4, c.ID_D_ETA, c.SW_SRC)],
        [Relation(
            "pair_SW_G",
            Diagram(4, source=c.ID_D_ETA,
                    atoms=(Atom("SW_G_inv", (0, 0, 0)), Atom("SW_G", (0, 0, 0)))),
            Diagram(4, source=c.ID_D_ETA),
        )],
    )
    assert ext.cell_counts()[4] == 12
    assert len(ext.relations) == 13
    assert pr.validate_presentation(ext).ok


def test_validate_presentation_catches_unknown():
    bad = pr.Presentation(
        n=2,
        cells=(GeneratorCell("X", 0),
               GeneratorCell("f", 1, dg.point("X"), dg.point("Ghost"))),
    )
    assert not pr.validate_presentation(bad).ok


def test_shipped_presentations_validate():
    for name in ("Adj31", "Adj31Plus", "Adj41", "Adj41Minus", "Adj41Plus", "EqAdj2"):
        assert pr.validate_presentation(build_presentation(name)).ok, name


def test_monotone_skeleton_after_add():
    p = build_presentation("Adj41")
    q = pr.add_generator(pr.new_presentation(4), 0, "X")
    # adding cells does not disturb lower skeleta
    p2 = pr.add_generator(p, 4, "extra", c.SW_SRC, c.ID_D_ETA)
    assert pr.skeleton(p2, 3) == pr.skeleton(p, 3)
    assert q.cell_counts()[0] == 1
