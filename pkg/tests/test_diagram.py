"""Term-model laws: boundaries, slices, composition, validation."""

import pytest
from hypothesis import given, settings, strategies as st

from cellrw import diagram as dg
from cellrw.diagram import Atom, Diagram, point
from cellrw.adjlib import build_presentation
from cellrw.adjlib import core as c

from strategies import ADJ31, ADJ41, composable_pairs, diagrams

P = ADJ41


def test_identity_diagram_basics():
    id_x = dg.identity_diagram(c.X)
    assert id_x.dim == 1 and id_x.atoms == ()
    assert dg.boundary(id_x, dg.TGT, P) == c.X
    id2 = dg.identity_diagram(id_x)
    assert id2.dim == 2
    assert dg.boundary(id2, dg.SRC, P) == id_x
    assert dg.boundary(id2, dg.TGT, P) == id_x


def test_identity_on_snake_matches_cusp_target():
    # the identity 3-diagram on the snake is the target of the unit cusp pairing
    id_snake = dg.identity_diagram(c.SNAKE_L)
    assert id_snake == c.ID_SNAKE_L
    assert dg.validate(id_snake, P).ok
    assert P.cell_target("u_Cl_inv") == id_snake


def test_identity_overflow():
    d = c.X
    for _ in range(5):
        d = dg.identity_diagram(d)
    with pytest.raises(dg.DimensionOverflow):
        dg.identity_diagram(d)


def test_eta_boundaries():
    assert dg.boundary(c.D_ETA, dg.SRC, P) == c.ID_X
    assert dg.boundary(c.D_ETA, dg.TGT, P) == c.PATH_LR
    assert [a.gen for a in c.PATH_LR.atoms] == ["l", "r"]


def test_snake_slices():
    sl = dg.slices(c.SNAKE_L, P)
    assert [[a.gen for a in s.atoms] for s in sl] == [["l"], ["l", "r", "l"], ["l"]]
    assert dg.boundary(c.SNAKE_L, dg.TGT, P) == c.PATH_L


def test_slices_of_identity():
    assert dg.slices(dg.identity_diagram(c.SNAKE_L), P) == [c.SNAKE_L]


def test_no_boundary_for_points():
    with pytest.raises(dg.NoBoundary):
        dg.boundary(c.X, dg.SRC, P)
    with pytest.raises(dg.NoBoundary):
        dg.slices(c.X, P)


def test_compose_paths():
    lr = dg.compose(c.PATH_L, c.PATH_R, 0, P)
    assert lr == c.PATH_LR
    with pytest.raises(dg.ComposeMismatch):
        dg.compose(c.PATH_L, c.PATH_L, 0, P)
    with pytest.raises(dg.DimensionMismatch):
        dg.compose(c.PATH_L, c.D_ETA, 0, P)


def test_compose_snake_from_whiskers():
    # whiskering is composition with an identity: eta.l then l.eps gives the snake
    eta_l = dg.compose(c.D_ETA, dg.identity_diagram(c.PATH_L), 0, P)
    l_eps = dg.compose(dg.identity_diagram(c.PATH_L), c.D_EPS, 0, P)
    snake = dg.compose(eta_l, l_eps, 1, P)
    assert snake == c.SNAKE_L
    assert dg.validate(snake, P).ok


def test_validate_error_cases():
    bad_height = Diagram(2, source=c.PATH_L, atoms=(Atom("eta", (5,)),))
    assert dg.validate(bad_height, P).code == dg.HEIGHT_OUT_OF_RANGE
    unknown = Diagram(2, source=c.PATH_L, atoms=(Atom("nope", (0,)),))
    assert dg.validate(unknown, P).code == dg.UNKNOWN_CELL
    mismatch = Diagram(2, source=c.PATH_R, atoms=(Atom("eps", (0,)),))
    assert dg.validate(mismatch, P).code in (dg.SLICE_MISMATCH, dg.HEIGHT_OUT_OF_RANGE)
    assert dg.validate(c.SW_SRC, P).ok


def test_validate_total_on_garbage():
    # never raises, whatever the shape
    assert not dg.validate(Diagram(2, source=None, atoms=()), P).ok
    assert not dg.validate(Diagram(0, source=c.X, atoms=(), base="X"), P).ok
    assert not dg.validate(Diagram(-1, base="X"), P).ok


@given(diagrams())
@settings(max_examples=200, deadline=None)
def test_random_diagrams_validate(d):
    assert dg.validate(d, ADJ31).ok


@given(diagrams().filter(lambda d: d.dim >= 2))
@settings(max_examples=200, deadline=None)
def test_globularity(d):
    src = dg.boundary(d, dg.SRC, ADJ31)
    tgt = dg.boundary(d, dg.TGT, ADJ31)
    assert dg.boundary(src, dg.SRC, ADJ31) == dg.boundary(tgt, dg.SRC, ADJ31)
    assert dg.boundary(src, dg.TGT, ADJ31) == dg.boundary(tgt, dg.TGT, ADJ31)


@given(diagrams().filter(lambda d: d.dim >= 1))
@settings(max_examples=200, deadline=None)
def test_slices_shape(d):
    sl = dg.slices(d, ADJ31)
    assert len(sl) == len(d.atoms) + 1
    assert sl[0] == d.source
    assert sl[-1] == dg.boundary(d, dg.TGT, ADJ31)
    for s in sl:
        assert dg.validate(s, ADJ31).ok


@given(composable_pairs())
@settings(max_examples=150, deadline=None)
def test_compose_valid_and_unital(pair):
    d1, d2, lv = pair
    comp = dg.compose(d1, d2, lv, ADJ31)
    assert dg.validate(comp, ADJ31).ok
    # unit law at the top level
    unit = dg.identity_diagram(dg.boundary(d1, dg.TGT, ADJ31)) if d1.dim >= 1 else None
    if unit is not None and unit.dim == d1.dim:
        assert dg.compose(d1, unit, d1.dim - 1, ADJ31) == d1


@given(composable_pairs(level=0).filter(lambda t: t[0].dim >= 1))
@settings(max_examples=100, deadline=None)
def test_compose_boundary_of_composite(pair):
    d1, d2, lv = pair
    comp = dg.compose(d1, d2, lv, ADJ31)
    if d1.dim == 1:
        want = Diagram(1, source=d1.source, atoms=d1.atoms + d2.atoms)
        assert comp == want


def test_compose_associative_three_paths():
    a = dg.compose(dg.compose(c.PATH_L, c.PATH_R, 0, P), c.PATH_L, 0, P)
    b = dg.compose(c.PATH_L, dg.compose(c.PATH_R, c.PATH_L, 0, P), 0, P)
    assert a == b


def test_compose_associative_2diagrams():
    # three vertically stacked 2-diagrams over the snake route
    d1 = Diagram(2, source=c.PATH_L, atoms=(Atom("eta", (0,)),))
    mid = dg.boundary(d1, dg.TGT, P)
    d2 = Diagram(2, source=mid, atoms=(Atom("eps", (1,)),))
    d3 = dg.identity_diagram(dg.boundary(d2, dg.TGT, P))
    left = dg.compose(dg.compose(d1, d2, 1, P), d3, 1, P)
    right = dg.compose(d1, dg.compose(d2, d3, 1, P), 1, P)
    assert left == right == c.SNAKE_L


@given(st.recursive(
    st.builds(Diagram, dim=st.integers(-1, 6), base=st.one_of(st.none(), st.text(max_size=3))),
    lambda children: st.builds(
        Diagram,
        dim=st.integers(-1, 6),
        source=st.one_of(st.none(), children),
        atoms=st.tuples() | st.tuples(
            st.builds(Atom, gen=st.text(max_size=4),
                      pos=st.tuples() | st.tuples(st.integers(-2, 9)) |
                          st.tuples(st.integers(-2, 9), st.integers(-2, 9)))),
        base=st.one_of(st.none(), st.sampled_from(["X", "Y", "zz"])),
    ),
    max_leaves=4,
))
@settings(max_examples=300, deadline=None)
def test_validate_never_raises_on_garbage(d):
    verdict = dg.validate(d, ADJ31)
    assert isinstance(verdict.ok, bool)
