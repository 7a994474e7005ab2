"""Kernel laws: matching, step application, derivation replay, search."""

import pytest
from hypothesis import given, settings, strategies as st

from cellrw import diagram as dg
from cellrw import rewrite as rw
from cellrw.adjlib import build_presentation
from cellrw.adjlib import core as c
from cellrw.diagram import Atom, Diagram, SWAP

from strategies import ADJ31, diagrams

P31 = ADJ31
P41 = build_presentation("Adj41")


# -- brute-force matcher oracle (independent of occurs/find_matches) ---------


def oracle_embedding_ok(pattern, host, start, offsets, sig) -> bool:
    n = len(pattern.atoms)
    if start < 0 or start + n > len(host.atoms):
        return False
    for i in range(n):
        if host.atoms[start + i] != pattern.atoms[i].shifted(offsets):
            return False
    try:
        hs = dg.slices(host, sig)[start]
    except dg.DiagramError:
        return False
    return oracle_occurs_source(pattern.source, hs, offsets, sig)


def oracle_occurs_source(pattern, host, pos, sig) -> bool:
    if pattern.dim == 0:
        return pattern.base == host.base
    if len(pos) != pattern.dim:
        return False
    b, rest = pos[0], pos[1:]
    n = len(pattern.atoms)
    if b < 0 or b + n > len(host.atoms):
        return False
    for i in range(n):
        if host.atoms[b + i] != pattern.atoms[i].shifted(rest):
            return False
    try:
        hs = dg.slices(host, sig)[b]
    except dg.DiagramError:
        return False
    return oracle_occurs_source(pattern.source, hs, rest, sig)


def offset_box(host, depth, sig) -> list[int]:
    """Upper bounds per offset level, from the host's full slice tree.

    offsets[j] indexes the atom list of a slice at depth j+1 below the
    host, so the bound at level j is the largest atom count seen there.
    """
    if depth == 0:
        return []
    bounds = [0] * depth
    def walk(d, level):
        if level >= depth:
            return
        bounds[level] = max(bounds[level], len(d.atoms))
        if d.dim >= 1:
            for s in dg.slices(d, sig):
                walk(s, level + 1)
    for s in dg.slices(host, sig):
        walk(s, 0)
    return bounds


def oracle_find_matches(pattern, host, sig):
    import itertools
    if host.dim == 0:
        return [rw.Embedding(0, ())] if pattern == host else []
    out = []
    box = offset_box(host, host.dim - 1, sig)
    ranges = [range(b + 1) for b in box]
    for start in range(len(host.atoms) - len(pattern.atoms) + 1):
        for offsets in itertools.product(*ranges):
            if oracle_embedding_ok(pattern, host, start, offsets, sig):
                out.append(rw.Embedding(start, tuple(offsets)))
    return out


def test_find_matches_identity_embedding():
    host = c.SNAKE_L
    assert rw.Embedding(0, (0,)) in rw.find_matches(host, host, P31)


def test_find_matches_single_eta_in_snake():
    pat = Diagram(2, source=c.ID_X, atoms=(Atom("eta", (0,)),))
    found = rw.find_matches(pat, c.SNAKE_L, P31)
    assert len(found) == 1 and found[0].start == 0


def test_find_matches_identity_pattern():
    # the empty pattern over X matches [l, r] at every X-typed height:
    # position 0 (before l) and position 2 (after r, which lands back at X)
    pat = Diagram(1, source=c.X)
    found = rw.find_matches(pat, c.PATH_LR, P31)
    assert found == [rw.Embedding(0, ()), rw.Embedding(2, ())]
    assert found == oracle_find_matches(pat, c.PATH_LR, P31)
    # against slices it counts boundary-compatible heights
    pat2 = dg.identity_diagram(c.ID_X)
    hits = rw.find_matches(pat2, c.SNAKE_L, P31)
    assert all(oracle_embedding_ok(pat2, c.SNAKE_L, e.start, e.offsets, P31) for e in hits)


def test_find_matches_dimension_mismatch():
    with pytest.raises(rw.DimensionMismatch):
        rw.find_matches(c.PATH_L, c.SNAKE_L, P31)


@given(diagrams(max_dim=3, max_atoms=6), diagrams(max_dim=3, max_atoms=4))
@settings(max_examples=120, deadline=None)
def test_matcher_agrees_with_oracle(host, pat):
    if pat.dim != host.dim:
        return
    got = rw.find_matches(pat, host, P31)
    want = oracle_find_matches(pat, host, P31)
    assert got == want


def test_apply_relation_forward_to_identity():
    lhs = P31.relation("pair_C_l_a").lhs
    step = rw.Apply("pair_C_l_a", rw.FORWARD, rw.Embedding(0, (0, 0)))
    out = rw.apply_step(lhs, step, P31)
    assert out == c.ID3_L


def test_transpose_involution():
    d = Diagram(
        3, source=c.D_ETA,
        atoms=(Atom("C_l_inv", (1, 0)), Atom("C_l_inv", (1, 0))),
    )
    assert dg.validate(d, P41).ok
    once = rw.apply_step(d, rw.Transpose(0), P41)
    assert once != d
    twice = rw.apply_step(once, rw.Transpose(0), P41)
    assert twice == d


def test_transpose_overlap_rejected():
    with pytest.raises(rw.NotIndependent):
        rw.apply_step(c.SNAKE_L, rw.Transpose(0), P31)


def test_interchanger_insert_remove_roundtrip():
    d = c.SW_SRC
    ins = rw.InterchangerInsert(1, (0, 1))
    up = rw.apply_step(d, ins, P41)
    assert dg.validate(up, P41).ok
    assert len(up.atoms) == 5
    down = rw.apply_step(up, rw.InterchangerRemove(1), P41)
    assert down == d
    with pytest.raises(rw.NotCancelingPair):
        rw.apply_step(d, rw.InterchangerRemove(0), P41)


@given(diagrams(max_dim=3, max_atoms=5), st.data())
@settings(max_examples=150, deadline=None)
def test_apply_step_preserves_boundaries(d, data):
    if d.dim < 2:
        return
    moves = []
    for r in P31.relations:
        if r.dim != d.dim:
            continue
        for direction, pat in ((rw.FORWARD, r.lhs), (rw.REVERSE, r.rhs)):
            for e in rw.find_matches(pat, d, P31):
                moves.append(rw.Apply(r.name, direction, e))
    moves.extend(rw.Transpose(i) for i in range(len(d.atoms) - 1))
    if not moves:
        return
    step = data.draw(st.sampled_from(moves))
    try:
        out = rw.apply_step(d, step, P31)
    except rw.RewriteError:
        return
    assert dg.validate(out, P31).ok
    assert dg.boundary(out, dg.SRC, P31) == dg.boundary(d, dg.SRC, P31)
    assert dg.boundary(out, dg.TGT, P31) == dg.boundary(d, dg.TGT, P31)


def test_check_derivation_empty():
    b = rw.ProofBundle(
        "triv", P31, c.SNAKE_L, c.SNAKE_L, rw.Derivation(P31, c.SNAKE_L, ())
    )
    assert rw.check_derivation(b).ok


def test_check_derivation_detects_start_mismatch():
    b = rw.ProofBundle(
        "bad", P31, c.SNAKE_L, c.SNAKE_L, rw.Derivation(P31, c.SNAKE_R, ())
    )
    rep = rw.check_derivation(b)
    assert not rep.ok and rep.code == rw.STEP_FAILED


def test_check_derivation_final_mismatch():
    b = rw.ProofBundle(
        "final", P31, c.SNAKE_L, c.SNAKE_R, rw.Derivation(P31, c.SNAKE_L, ())
    )
    rep = rw.check_derivation(b)
    assert rep.code == rw.FINAL_MISMATCH


def test_reverse_derivation_roundtrip():
    # the barred-swallowtail reduction, reversed, builds it back up
    steps = (
        rw.Apply("SW_rel", rw.FORWARD, rw.Embedding(1, (1, 0))),
        rw.Apply("pair_C_l_a", rw.FORWARD, rw.Embedding(0, (1, 0))),
    )
    deriv = rw.Derivation(P31, c.SWBAR_SRC, steps)
    fwd = rw.ProofBundle("swbar", P31, c.SWBAR_SRC, c.ID_D_ETA, deriv)
    assert rw.check_derivation(fwd).ok
    rev = rw.reverse_derivation(deriv)
    back = rw.ProofBundle("swbar_rev", P31, c.ID_D_ETA, c.SWBAR_SRC, rev)
    assert rw.check_derivation(back).ok


def test_reverse_derivation_with_interchanger_steps():
    d = c.SW_SRC
    steps = (rw.InterchangerInsert(1, (0, 1)), rw.InterchangerRemove(1))
    deriv = rw.Derivation(P41, d, steps)
    assert rw.check_derivation(rw.ProofBundle("ins", P41, d, d, deriv)).ok
    rev = rw.reverse_derivation(deriv)
    assert rw.check_derivation(rw.ProofBundle("rev", P41, d, d, rev)).ok


def test_auto_structural_trivial_and_single():
    assert rw.auto_structural(P41, c.SW_SRC, c.SW_SRC, 0).steps == ()
    d = Diagram(
        3, source=c.D_ETA,
        atoms=(Atom("C_l_inv", (1, 0)), Atom("C_l_inv", (1, 0))),
    )
    other = rw.apply_step(d, rw.Transpose(0), P41)
    found = rw.auto_structural(P41, d, other, 1)
    assert found is not None and found.steps == (rw.Transpose(0),)
    replay = rw.ProofBundle("t", P41, d, other, found)
    assert rw.check_derivation(replay).ok


def test_auto_structural_boundary_mismatch():
    other = Diagram(2, source=c.PATH_LR)
    with pytest.raises(rw.BoundaryMismatch):
        rw.auto_structural(P31, c.SNAKE_L, other, 2)


def test_auto_structural_no_route():
    assert rw.auto_structural(P41, c.SW_SRC, c.SWBAR_SRC, 2) is None


def test_auto_structural_multi_step_route():
    # two parallel forms differing by a relocated canceling swap pair:
    # the search must remove one pair and insert the other
    d = c.SW2_SRC
    with_pair_low = rw.apply_step(d, rw.InterchangerInsert(2, (0, 1)), P41)
    with_pair_high = rw.apply_step(d, rw.InterchangerInsert(2, (2, 3)), P41)
    assert with_pair_low != with_pair_high
    found = rw.auto_structural(P41, with_pair_low, with_pair_high, 4)
    assert found is not None and 0 < len(found.steps) <= 4
    bundle = rw.ProofBundle("route", P41, with_pair_low, with_pair_high, found)
    assert rw.check_derivation(bundle).ok


def test_check_derivation_zero_dimensional():
    x = c.X
    ok_bundle = rw.ProofBundle("pt", P31, x, x, rw.Derivation(P31, x, ()))
    assert rw.check_derivation(ok_bundle).ok
    bad = rw.ProofBundle("pt2", P31, x, dg.point("Y"), rw.Derivation(P31, x, ()))
    assert rw.check_derivation(bad).code == rw.FINAL_MISMATCH
