"""Enlarged presentations: the companion swallowtails and their relations.

The plus-plus family adjoins the companion swallowtail 4-cells together
with the butterfly and flip relations tying them to the original one.
Composite shapes live in chains (generated by scripts/author_all.py and
committed); this module assembles them into presentations.
"""

from __future__ import annotations

from functools import lru_cache

from .. import presentation as pr
from ..presentation import Presentation
from . import core as c
from . import chains as ch


@lru_cache(maxsize=None)
def build_adj41_plus_plus() -> Presentation:
    from .presentations import build_adj41_plus, _pair_relations

    p = build_adj41_plus()
    p = pr.add_generator(p, 4, "SW2", c.SW2_SRC, c.ID_D_EPS)
    p = pr.add_generator(p, 4, "SW2_inv", c.ID_D_EPS, c.SW2_SRC)
    p = _pair_relations(p, "SW2", "SW2_inv", c.ID_D_EPS, c.SW2_SRC, "SW2")
    p = pr.add_relation(p, "butterfly_1", ch.BUTTERFLY_1_LHS, c.ID_T_CR)
    p = pr.add_relation(p, "butterfly_2", ch.BUTTERFLY_2_LHS, c.ID_T_CL_INV)
    return p


@lru_cache(maxsize=None)
def build_adj41_plus3() -> Presentation:
    from .presentations import _pair_relations

    p = build_adj41_plus_plus()
    p = pr.add_generator(p, 4, "SWbar", c.SWBAR_SRC, c.ID_D_ETA)
    p = pr.add_generator(p, 4, "SWbar_inv", c.ID_D_ETA, c.SWBAR_SRC)
    p = pr.add_generator(p, 4, "SW2bar", c.SW2BAR_SRC, c.ID_D_EPS)
    p = pr.add_generator(p, 4, "SW2bar_inv", c.ID_D_EPS, c.SW2BAR_SRC)
    p = _pair_relations(p, "SWbar", "SWbar_inv", c.ID_D_ETA, c.SWBAR_SRC, "SWbar")
    p = _pair_relations(p, "SW2bar", "SW2bar_inv", c.ID_D_EPS, c.SW2BAR_SRC, "SW2bar")
    p = pr.add_relation(p, "butterfly_3", ch.BUTTERFLY_3_LHS, ch.BUTTERFLY_3_RHS)
    p = pr.add_relation(p, "butterfly_4", ch.BUTTERFLY_4_LHS, ch.BUTTERFLY_4_RHS)
    p = pr.add_relation(p, "flip_1", ch.FLIP_1_LHS, ch.FLIP_1_RHS)
    p = pr.add_relation(p, "flip_2", ch.FLIP_2_LHS, ch.FLIP_2_RHS)
    return p


@lru_cache(maxsize=None)
def build_adj41_max() -> Presentation:
    p = build_adj41_plus3()
    for name, (lhs, rhs) in ch.MAX_EXTRA_RELATIONS.items():
        p = pr.add_relation(p, name, lhs, rhs)
    return p
