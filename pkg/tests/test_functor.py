"""Presentation morphisms: checking, evaluation laws, composition."""

import pytest
from hypothesis import given, settings, strategies as st

from cellrw import diagram as dg
from cellrw import functor as fn
from cellrw import rewrite as rw
from cellrw.adjlib import build_presentation
from cellrw.adjlib import core as c
from cellrw.adjlib.morphisms import MORPHISM_NAMES, build_morphism
from cellrw.presentation import cell_diagram

from strategies import diagrams

ADJ41 = build_presentation("Adj41")


@pytest.mark.parametrize("name", MORPHISM_NAMES)
def test_registry_morphisms_check(name):
    assert fn.check_morphism(build_morphism(name)).ok, name


def test_identity_eval_is_identity():
    ident = build_morphism("id_41")
    assert fn.eval_morphism(ident, c.SW_SRC) == c.SW_SRC
    assert fn.eval_morphism(ident, c.SNAKE_L) == c.SNAKE_L


def test_inclusion_fixes_sw():
    incl = build_morphism("incl_41_max")
    sw = cell_diagram(ADJ41, "SW")
    assert fn.eval_morphism(incl, sw) == sw


def test_retraction_sends_sw2_to_composite():
    from cellrw.adjlib.chains import SW2_DEF

    retr = build_morphism("retr_max_41")
    pmax = build_presentation("Adj41Max")
    sw2 = cell_diagram(pmax, "SW2")
    assert fn.eval_morphism(retr, sw2) == SW2_DEF


def test_round_trip_fixes_generators():
    incl = build_morphism("incl_41_max")
    retr = build_morphism("retr_max_41")
    comp = fn.compose_morphisms(incl, retr)
    for cell in ADJ41.cells:
        want = dg.point(cell.name) if cell.dim == 0 else cell_diagram(ADJ41, cell.name)
        assert comp.assignment[cell.name] == want, cell.name
    assert fn.check_morphism(comp).ok


def test_other_composite_checks():
    incl = build_morphism("incl_41_max")
    retr = build_morphism("retr_max_41")
    comp = fn.compose_morphisms(retr, incl)
    assert fn.check_morphism(comp).ok


def test_check_morphism_detects_missing_certificate():
    retr = build_morphism("retr_max_41")
    broken_certs = dict(retr.certificates)
    broken_certs.pop("butterfly_1")
    broken = fn.PresentationMorphism(retr.source, retr.target, retr.assignment, broken_certs)
    rep = fn.check_morphism(broken)
    assert not rep.ok and rep.code == fn.CERTIFICATE_FAILED
    assert rep.relation == "butterfly_1"


def test_check_morphism_detects_boundary_incompat():
    ident = build_morphism("id_41")
    bad_assign = dict(ident.assignment)
    bad_assign["eta"] = c.D_EPS  # wrong boundaries entirely
    bad = fn.PresentationMorphism(ADJ41, ADJ41, bad_assign, ident.certificates)
    rep = fn.check_morphism(bad)
    assert not rep.ok


def test_eval_unknown_cell():
    theta_incl = build_morphism("incl_theta1_l_41")
    with pytest.raises(fn.UnknownCell):
        fn.eval_morphism(theta_incl, c.SNAKE_L)


@given(diagrams(p=ADJ41, max_dim=3, max_atoms=5))
@settings(max_examples=150, deadline=None)
def test_eval_preserves_validity_and_boundary(d):
    ident = build_morphism("id_41")
    out = fn.eval_morphism(ident, d)
    assert dg.validate(out, ADJ41).ok
    if d.dim >= 1:
        assert dg.boundary(out, dg.SRC, ADJ41) == fn.eval_morphism(ident, dg.boundary(d, dg.SRC, ADJ41))
        assert dg.boundary(out, dg.TGT, ADJ41) == fn.eval_morphism(ident, dg.boundary(d, dg.TGT, ADJ41))


@given(diagrams(p=ADJ41, max_dim=4, max_atoms=4))
@settings(max_examples=150, deadline=None)
def test_eval_commutes_with_inclusion_boundary(d):
    incl = build_morphism("incl_41_max")
    pmax = build_presentation("Adj41Max")
    out = fn.eval_morphism(incl, d)
    assert dg.validate(out, pmax).ok
    if d.dim >= 1:
        assert dg.boundary(out, dg.TGT, pmax) == fn.eval_morphism(
            incl, dg.boundary(d, dg.TGT, ADJ41)
        )


@given(diagrams(p=ADJ41, max_dim=3, max_atoms=4), diagrams(p=ADJ41, max_dim=3, max_atoms=4))
@settings(max_examples=100, deadline=None)
def test_eval_commutes_with_compose(d1, d2):
    if d1.dim != d2.dim or d1.dim < 1:
        return
    p = d1.dim - 1
    try:
        comp = dg.compose(d1, d2, p, ADJ41)
    except dg.DiagramError:
        return
    incl = build_morphism("incl_41_max")
    pmax = build_presentation("Adj41Max")
    lhs = fn.eval_morphism(incl, comp)
    rhs = dg.compose(fn.eval_morphism(incl, d1), fn.eval_morphism(incl, d2), p, pmax)
    assert lhs == rhs


def test_pushforward_expands_block_transpositions():
    # a transpose of atoms whose images are multi-atom composites expands
    # into a block transposition when pushed through the retraction
    pmax = build_presentation("Adj41Max")
    retr = build_morphism("retr_max_41")
    import cellrw.adjlib.core as cc
    from cellrw.diagram import Atom, Diagram

    two_cups = dg.compose(cc.D_EPS, cc.D_EPS, 0, pmax)
    id3 = dg.identity_diagram(two_cups)
    host = Diagram(
        4, source=id3,
        atoms=(Atom("SW2bar_inv", (0, 0, 0)), Atom("SW2bar_inv", (0, 1, 0))),
    )
    assert dg.validate(host, pmax).ok
    step = rw.Transpose(0)
    swapped = rw.apply_step(host, step, pmax)
    deriv = rw.Derivation(pmax, host, (step,))
    pushed = fn.pushforward_derivation(retr, deriv)
    out = pushed.start
    p41 = build_presentation("Adj41")
    assert dg.validate(out, p41).ok
    assert len(pushed.steps) == 4  # 2x2 block expansion
    final = out
    for s in pushed.steps:
        final = rw.apply_step(final, s, p41)
    assert final == fn.eval_morphism(retr, swapped)
