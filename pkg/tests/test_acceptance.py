"""Acceptance criteria, one test per criterion, one printed verdict each.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdict lines.
"""

import itertools
import json
import random
import time
from pathlib import Path

import pytest

from cellrw import cli
from cellrw import diagram as dg
from cellrw import functor as fn
from cellrw import render as rd
from cellrw import rewrite as rw
from cellrw import serialize as sz
from cellrw.adjlib import build_presentation
from cellrw.adjlib import core as c
from cellrw.adjlib.bundles import BUNDLE_NAMES, build_bundle
from cellrw.adjlib.morphisms import build_morphism
from cellrw.adjlib.registry import verify_all
from cellrw.diagram import Atom, Diagram
from cellrw.presentation import cell_diagram, skeleton

from strategies import applicable_atoms
from test_rewrite import oracle_find_matches

DATA = Path(__file__).resolve().parent.parent / "src" / "cellrw" / "data"


def report(criterion: str, ok: bool, detail: str = ""):
    line = f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


# -- 1: registry verification --------------------------------------------------


def test_criterion_1_registry_verification():
    t0 = time.perf_counter()
    rep = verify_all()
    elapsed = time.perf_counter() - t0
    ok = rep.ok and len(rep.items) == 26 and elapsed < 60
    kinds = [item.kind for item in rep.items]
    ok = ok and kinds.count("presentation") == 10 and kinds.count("bundle") == 16
    report("1 registry-verification", ok, f"26 items in {elapsed:.2f}s")


# -- 2: structural data --------------------------------------------------------


def test_criterion_2_structural_data():
    p41 = build_presentation("Adj41")
    plus = build_presentation("Adj41Plus")
    pmax = build_presentation("Adj41Max")
    minus = build_presentation("Adj41Minus")
    ok = p41.cell_counts() == {0: 2, 1: 2, 2: 2, 3: 4, 4: 10} and len(p41.relations) == 12
    ok = ok and len(plus.relations) == 18 and plus.cells == p41.cells
    sw_cells = [x for x in pmax.cells_of_dim(4) if "SW" in x.name]
    butterflies = [r for r in pmax.relations if r.name.startswith("butterfly_")]
    flips = [r for r in pmax.relations if r.name.startswith("flip_")]
    snakes = [r for r in pmax.relations if r.name.startswith(("snake_", "snake2_"))]
    ok = ok and (len(sw_cells), len(butterflies), len(flips), len(snakes)) == (8, 8, 8, 8)
    ok = ok and minus.cells == p41.cells
    ok = ok and {r.name for r in p41.relations} - {r.name for r in minus.relations} == {
        "snake_C_l", "snake_C_r"
    }
    report("2 structural-data", ok)


# -- 3: kernel soundness under mutation -----------------------------------------


def _mutants(steps):
    """The fixed mutation set: embedding/index shifts, direction flips,
    dropped steps, swapped adjacent steps."""
    out = []
    for i, s in enumerate(steps):
        if isinstance(s, rw.Apply):
            e = s.at
            out.append(steps[:i] + (rw.Apply(s.relation, s.direction,
                                             rw.Embedding(e.start + 1, e.offsets)),) + steps[i + 1:])
            if e.start > 0:
                out.append(steps[:i] + (rw.Apply(s.relation, s.direction,
                                                 rw.Embedding(e.start - 1, e.offsets)),) + steps[i + 1:])
            flipped = rw.REVERSE if s.direction == rw.FORWARD else rw.FORWARD
            out.append(steps[:i] + (rw.Apply(s.relation, flipped, e),) + steps[i + 1:])
        elif isinstance(s, rw.Transpose):
            out.append(steps[:i] + (rw.Transpose(s.index + 1),) + steps[i + 1:])
            if s.index > 0:
                out.append(steps[:i] + (rw.Transpose(s.index - 1),) + steps[i + 1:])
        elif isinstance(s, rw.InterchangerInsert):
            out.append(steps[:i] + (rw.InterchangerInsert(s.at + 1, s.pair),) + steps[i + 1:])
            if s.at > 0:
                out.append(steps[:i] + (rw.InterchangerInsert(s.at - 1, s.pair),) + steps[i + 1:])
        elif isinstance(s, rw.InterchangerRemove):
            out.append(steps[:i] + (rw.InterchangerRemove(s.at + 1),) + steps[i + 1:])
            if s.at > 0:
                out.append(steps[:i] + (rw.InterchangerRemove(s.at - 1),) + steps[i + 1:])
        out.append(steps[:i] + steps[i + 1:])  # drop
    for i in range(len(steps) - 1):
        swapped = steps[:i] + (steps[i + 1], steps[i]) + steps[i + 2:]
        out.append(swapped)
    return out


def test_criterion_3_mutation_soundness():
    t0 = time.perf_counter()
    total = survived = 0
    survivors = []
    for name in BUNDLE_NAMES:
        bundle = build_bundle(name)
        for mutant_steps in _mutants(bundle.derivation.steps):
            if mutant_steps == bundle.derivation.steps:
                continue  # not a mutant
            total += 1
            mutant = rw.ProofBundle(
                bundle.name, bundle.context, bundle.lhs, bundle.rhs,
                rw.Derivation(bundle.context, bundle.lhs, mutant_steps),
            )
            if rw.check_derivation(mutant).ok:
                survived += 1
                survivors.append((name, mutant_steps))
    elapsed = time.perf_counter() - t0
    ok = survived == 0 and elapsed < 300 and total > 0
    report("3 mutation-soundness", ok,
           f"{total} mutants, {survived} survived, {elapsed:.1f}s")


# -- 4: matcher oracle equivalence ----------------------------------------------


def random_diagram(rng, p, max_dim=3, max_atoms=6, dim=None):
    k = dim if dim is not None else rng.randint(0, max_dim)
    if k == 0:
        return dg.point(rng.choice([x.name for x in p.cells_of_dim(0)]))
    src = random_diagram(rng, p, dim=k - 1, max_atoms=max_atoms)
    atoms = []
    slice_d = src
    for _ in range(rng.randint(0, max_atoms)):
        options = applicable_atoms(slice_d, p, k)
        if not options:
            break
        a = rng.choice(options)
        atoms.append(a)
        slice_d = dg.rewrite_slice(slice_d, a, p)
    return Diagram(k, source=src, atoms=tuple(atoms))


def test_criterion_4_matcher_oracle():
    p = build_presentation("Adj31")
    rng = random.Random(31)
    checked = 0
    ok = True
    while checked < 1000:
        host = random_diagram(rng, p, max_dim=3, max_atoms=6)
        pat = random_diagram(rng, p, max_dim=3, max_atoms=3, dim=host.dim)
        got = rw.find_matches(pat, host, p)
        want = oracle_find_matches(pat, host, p)
        if got != want:
            ok = False
            break
        checked += 1
    report("4 matcher-oracle", ok, f"{checked} randomized cases")


# -- 5: algebraic law suite ------------------------------------------------------


def _composable_from(rng, p, d):
    """A diagram composable with d at the top level."""
    src = dg.boundary(d, dg.TGT, p)
    atoms = []
    slice_d = src
    for _ in range(rng.randint(0, 3)):
        options = applicable_atoms(slice_d, p, d.dim)
        if not options:
            break
        a = rng.choice(options)
        atoms.append(a)
        slice_d = dg.rewrite_slice(slice_d, a, p)
    return Diagram(d.dim, source=src, atoms=tuple(atoms))


def test_criterion_5_algebraic_laws():
    p = build_presentation("Adj31")
    rng = random.Random(41)
    n = 500
    ok = True
    for _ in range(n):
        d = random_diagram(rng, p, max_dim=3, max_atoms=5)
        if not dg.validate(d, p).ok:
            ok = False
            break
        if d.dim >= 2:
            s, t = dg.boundary(d, dg.SRC, p), dg.boundary(d, dg.TGT, p)
            if dg.boundary(s, dg.SRC, p) != dg.boundary(t, dg.SRC, p):
                ok = False
                break
            if dg.boundary(s, dg.TGT, p) != dg.boundary(t, dg.TGT, p):
                ok = False
                break
        if d.dim >= 1:
            # associativity and units at the top level
            d2 = _composable_from(rng, p, d)
            d3 = _composable_from(rng, p, d2)
            k = d.dim - 1
            left = dg.compose(dg.compose(d, d2, k, p), d3, k, p)
            right = dg.compose(d, dg.compose(d2, d3, k, p), k, p)
            if left != right:
                ok = False
                break
            unit_r = Diagram(d.dim, source=dg.boundary(d, dg.TGT, p))
            unit_l = Diagram(d.dim, source=d.source)
            if dg.compose(d, unit_r, k, p) != d or dg.compose(unit_l, d, k, p) != d:
                ok = False
                break
    report("5a globularity-compose-laws", ok, f"{n} cases")

    # apply_step boundary preservation and transpose involution
    ok2 = True
    cases = 0
    while cases < 500:
        d = random_diagram(rng, p, max_dim=3, max_atoms=5)
        if d.dim < 2:
            continue
        moves = []
        for r in p.relations:
            if r.dim != d.dim:
                continue
            for direction, pat in ((rw.FORWARD, r.lhs), (rw.REVERSE, r.rhs)):
                moves.extend(rw.Apply(r.name, direction, e)
                             for e in rw.find_matches(pat, d, p))
        transposables = []
        for i in range(len(d.atoms) - 1):
            try:
                dg.transpose_atoms(d, i, p)
                transposables.append(i)
            except dg.DiagramError:
                pass
        moves.extend(rw.Transpose(i) for i in transposables)
        if not moves:
            continue
        step = rng.choice(moves)
        out = rw.apply_step(d, step, p)
        if not dg.validate(out, p).ok:
            ok2 = False
            break
        if dg.boundary(out, dg.SRC, p) != dg.boundary(d, dg.SRC, p) or (
            dg.boundary(out, dg.TGT, p) != dg.boundary(d, dg.TGT, p)
        ):
            ok2 = False
            break
        if transposables:
            i = rng.choice(transposables)
            once = rw.apply_step(d, rw.Transpose(i), p)
            twice = rw.apply_step(once, rw.Transpose(i), p)
            if twice != d:
                ok2 = False
                break
        cases += 1
    report("5b step-boundaries-involution", ok2, f"{cases} cases")

    # reverse-derivation validity on random short derivations
    ok3 = True
    cases = 0
    while cases < 500:
        d = random_diagram(rng, p, max_dim=3, max_atoms=4)
        if d.dim < 2:
            continue
        steps = []
        cur = d
        for _ in range(rng.randint(1, 4)):
            moves = []
            for r in p.relations:
                if r.dim != cur.dim:
                    continue
                for direction, pat in ((rw.FORWARD, r.lhs), (rw.REVERSE, r.rhs)):
                    moves.extend(rw.Apply(r.name, direction, e)
                                 for e in rw.find_matches(pat, cur, p)[:4])
            for i in range(len(cur.atoms) - 1):
                try:
                    dg.transpose_atoms(cur, i, p)
                    moves.append(rw.Transpose(i))
                except dg.DiagramError:
                    pass
            if not moves:
                break
            step = rng.choice(moves)
            if len(rw.apply_step(cur, step, p).atoms) > 8:
                break
            steps.append(step)
            cur = rw.apply_step(cur, step, p)
        if not steps:
            continue
        deriv = rw.Derivation(p, d, tuple(steps))
        fwd = rw.ProofBundle("f", p, d, cur, deriv)
        rev = rw.ProofBundle("r", p, cur, d, rw.reverse_derivation(deriv))
        if not rw.check_derivation(fwd).ok or not rw.check_derivation(rev).ok:
            ok3 = False
            break
        cases += 1
    report("5c reverse-derivations", ok3, f"{cases} cases")


# -- 6: functor suite ------------------------------------------------------------


def test_criterion_6_functor_suite():
    p41 = build_presentation("Adj41")
    pmax = build_presentation("Adj41Max")
    names = ("id_41", "incl_sk3_41", "incl_theta1_l_41", "incl_41_max", "retr_max_41")
    ok = all(fn.check_morphism(build_morphism(n)).ok for n in names)
    incl = build_morphism("incl_41_max")
    retr = build_morphism("retr_max_41")
    comp = fn.compose_morphisms(incl, retr)
    for cell in p41.cells:
        want = dg.point(cell.name) if cell.dim == 0 else cell_diagram(p41, cell.name)
        ok = ok and comp.assignment[cell.name] == want
    rng = random.Random(59)
    cases = 0
    while cases < 500:
        d = random_diagram(rng, p41, max_dim=4, max_atoms=4)
        out = fn.eval_morphism(incl, d)
        if not dg.validate(out, pmax).ok:
            ok = False
            break
        if d.dim >= 1:
            if dg.boundary(out, dg.TGT, pmax) != fn.eval_morphism(
                incl, dg.boundary(d, dg.TGT, p41)
            ):
                ok = False
                break
            d2 = _composable_from(rng, p41, d)
            lhs = fn.eval_morphism(incl, dg.compose(d, d2, d.dim - 1, p41))
            rhs = dg.compose(out, fn.eval_morphism(incl, d2), d.dim - 1, pmax)
            if lhs != rhs:
                ok = False
                break
        cases += 1
    report("6 functor-suite", ok, f"{cases} random diagrams")


# -- 7: serialization -------------------------------------------------------------


def test_criterion_7_serialization(capsys):
    ok = True
    files = sorted(DATA.glob("*/*.json"))
    for path in files:
        blob = path.read_bytes()
        if sz.dumps(sz.to_obj(sz.loads(blob.decode()))).encode() != blob:
            ok = False
            break
    code1 = cli.run(["check", "--all", "--json"])
    out1 = capsys.readouterr().out
    code2 = cli.run(["check", "--all", "--json"])
    out2 = capsys.readouterr().out
    ok = ok and code1 == code2 == 0 and out1 == out2 and json.loads(out1)["ok"]
    report("7 serialization", ok, f"{len(files)} files byte-exact, json stable")


# -- 8: rendering ------------------------------------------------------------------


def test_criterion_8_rendering_goldens():
    p41 = build_presentation("Adj41")
    golden = {
        "id_X.txt": rd.render(c.ID_X, p41, "txt"),
        "eta.txt": rd.render(c.D_ETA, p41, "txt"),
        "snake_l.txt": rd.render(c.SNAKE_L, p41, "txt"),
        "SW_src_filmstrip.txt": rd.render(c.SW_SRC, p41, "txt", slices=True),
    }
    ok = all((DATA / "golden" / name).read_bytes() == data for name, data in golden.items())
    report("8 rendering-goldens", ok)
