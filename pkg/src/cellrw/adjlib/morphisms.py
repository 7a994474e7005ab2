"""Registry morphisms: identity, skeleton inclusions, and the maximal
presentation's inclusion/retraction pair.

The retraction sends each companion swallowtail generator to its defining
composite; every relation of the maximal presentation gets an explicit
derivation certificate over the minimal one, replayed by check_morphism.
"""

from __future__ import annotations

from functools import lru_cache

from .. import diagram as dg
from .. import presentation as pr
from .. import rewrite as rw
from ..diagram import Atom, Diagram
from ..functor import PresentationMorphism, eval_morphism, identity_morphism, inclusion_morphism
from ..presentation import Presentation, cell_diagram
from . import chains as ch
from . import core as c
from .bundles import reverse_composite
from .presentations import build_presentation

MORPHISM_NAMES = (
    "id_41",
    "incl_sk3_41",
    "incl_theta1_l_41",
    "incl_41_max",
    "retr_max_41",
)


def _greedy_pair_cancellation(p: Presentation, start: Diagram) -> rw.Derivation:
    """Cancel adjacent inverse pairs until none apply (deterministic order)."""
    pair_rels = [r for r in p.relations if len(r.lhs.atoms) == 2 and not r.rhs.atoms]
    d = start
    steps = []
    while True:
        for rel in pair_rels:
            found = rw.find_matches(rel.lhs, d, p)
            if found:
                step = rw.Apply(rel.name, rw.FORWARD, found[0])
                steps.append(step)
                d = rw.apply_step(d, step, p)
                break
        else:
            break
    return rw.Derivation(p, start, tuple(steps))


@lru_cache(maxsize=None)
def build_morphism(name: str) -> PresentationMorphism:
    if name == "id_41":
        return identity_morphism(build_presentation("Adj41"))
    if name == "incl_sk3_41":
        p41 = build_presentation("Adj41")
        return inclusion_morphism(pr.skeleton(p41, 3), p41)
    if name == "incl_theta1_l_41":
        theta1 = build_presentation("Theta1")
        p41 = build_presentation("Adj41")
        assignment = {"s0": c.X, "t0": c.Y, "c1": c.PATH_L}
        return PresentationMorphism(theta1, p41, assignment, {})
    if name == "incl_41_max":
        return inclusion_morphism(
            build_presentation("Adj41"), build_presentation("Adj41Max")
        )
    if name == "retr_max_41":
        return _build_retraction()
    raise KeyError(name)


def _build_retraction() -> PresentationMorphism:
    pmax = build_presentation("Adj41Max")
    p41 = build_presentation("Adj41")
    composites = {
        "SW2": ch.SW2_DEF,
        "SW2_inv": reverse_composite(ch.SW2_DEF, p41),
        "SWbar": ch.SWBAR_DEF,
        "SWbar_inv": reverse_composite(ch.SWBAR_DEF, p41),
        "SW2bar": ch.SW2BAR_DEF,
        "SW2bar_inv": reverse_composite(ch.SW2BAR_DEF, p41),
    }
    assignment = {}
    for cell in pmax.cells:
        if cell.name in composites:
            assignment[cell.name] = composites[cell.name]
        elif cell.dim == 0:
            assignment[cell.name] = dg.point(cell.name)
        else:
            assignment[cell.name] = cell_diagram(p41, cell.name)
    f = PresentationMorphism(pmax, p41, assignment, {})

    # chain reuse: the spliced images of the butterfly and flip relations
    # coincide with the shipped bundle diagrams
    bundle_chain = {
        "butterfly_1": "B1_butterfly1",
        "butterfly_2": "B2_butterfly2",
        "butterfly_3": "B4_barbutterfly_a",
        "butterfly_4": "B4_barbutterfly_b",
        "butterfly_5": "B1_butterfly1",
        "butterfly_6": "B2_butterfly2",
        "butterfly_7": "B4_barbutterfly_a",
        "butterfly_8": "B4_barbutterfly_b",
        "flip_1": "B3a_flip_SW",
        "flip_2": "B3b_flip_SW2",
        "flip_3": "B3a_flip_SW",
        "flip_4": "B3b_flip_SW2",
    }
    certs = {}
    adj41_names = {r.name for r in p41.relations}
    for rel in pmax.relations:
        lhs = eval_morphism(f, rel.lhs)
        if rel.name in adj41_names:
            certs[rel.name] = rw.Derivation(
                p41, lhs,
                (rw.Apply(rel.name, rw.FORWARD, rw.Embedding(0, (0,) * (rel.dim - 1))),),
            )
        elif rel.name in ch.B13_EXTRA:
            certs[rel.name] = rw.Derivation(p41, lhs, ch.B13_EXTRA[rel.name])
        elif rel.name in bundle_chain:
            from .bundles import build_bundle

            certs[rel.name] = rw.Derivation(
                p41, lhs, build_bundle(bundle_chain[rel.name]).derivation.steps
            )
        else:
            # pair relations of the companions, and the definitional flips:
            # greedy cancellation of the spliced images
            certs[rel.name] = _greedy_pair_cancellation(p41, lhs)
    return PresentationMorphism(pmax, p41, assignment, certs)
