"""The registry of free-adjunction presentations.

Builders for the 2-, 3- and 4-dimensional coherent-adjunction computads:
the minimal 4-presentation, its enlargements up to the maximal one, the
minimal-minus variant used for surjectivity, the 3-dimensional ancestors,
the free globes, and the 2-dimensional adjoint-equivalence context.
"""

from __future__ import annotations

from functools import lru_cache

from .. import presentation as pr
from ..diagram import Atom, Diagram, SWAP
from ..presentation import Presentation
from . import core as c

THETA_NAMES = ("Theta0", "Theta1", "Theta2", "Theta3", "Theta4")

PRESENTATION_NAMES = THETA_NAMES + (
    "Adj31",
    "Adj31Plus",
    "Adj41Minus",
    "Adj41",
    "Adj41Plus",
    "Adj41PlusPlus",
    "Adj41PlusPlusPlus",
    "Adj41Max",
    "EqAdj2",
)

# the ten registry items exercised by `check --all` (one free globe stands
# in for the whole theta family; lower globes are its skeleta)
CHECKED_PRESENTATIONS = (
    "Theta4",
    "Adj31",
    "Adj31Plus",
    "Adj41Minus",
    "Adj41",
    "Adj41Plus",
    "Adj41PlusPlus",
    "Adj41PlusPlusPlus",
    "Adj41Max",
    "EqAdj2",
)


def _adjunction_skeleton(n: int) -> Presentation:
    """Cells shared by every Adj presentation: X, Y, l, r, eta, eps."""
    p = pr.new_presentation(n)
    p = pr.add_generator(p, 0, "X")
    p = pr.add_generator(p, 0, "Y")
    p = pr.add_generator(p, 1, "l", c.X, c.Y)
    p = pr.add_generator(p, 1, "r", c.Y, c.X)
    p = pr.add_generator(p, 2, "eta", c.ID_X, c.PATH_LR)
    p = pr.add_generator(p, 2, "eps", c.PATH_RL, c.ID_Y)
    return p


def _add_cusps(p: Presentation) -> Presentation:
    p = pr.add_generator(p, 3, "C_l", c.SNAKE_L, c.ID2_L)
    p = pr.add_generator(p, 3, "C_l_inv", c.ID2_L, c.SNAKE_L)
    p = pr.add_generator(p, 3, "C_r", c.SNAKE_R, c.ID2_R)
    p = pr.add_generator(p, 3, "C_r_inv", c.ID2_R, c.SNAKE_R)
    return p


def build_adj31() -> Presentation:
    p = _add_cusps(_adjunction_skeleton(3))
    p = pr.add_relation(p, "pair_C_l_a", c.K_L, c.ID3_L)
    p = pr.add_relation(p, "pair_C_l_b", c.KP_L, c.ID_SNAKE_L)
    p = pr.add_relation(p, "pair_C_r_a", c.K_R, c.ID3_R)
    p = pr.add_relation(p, "pair_C_r_b", c.KP_R, c.ID_SNAKE_R)
    p = pr.add_relation(p, "SW_rel", c.SW_SRC, c.ID_D_ETA)
    return p


def build_adj31_plus() -> Presentation:
    p = build_adj31()
    p = pr.add_relation(p, "SWbar_rel", c.SWBAR_SRC, c.ID_D_ETA)
    p = pr.add_relation(p, "SW2_rel", c.SW2_SRC, c.ID_D_EPS)
    p = pr.add_relation(p, "SW2bar_rel", c.SW2BAR_SRC, c.ID_D_EPS)
    return p


def _pair_relations(
    p: Presentation, fwd: str, rev: str, lo: Diagram, hi: Diagram, tag: str
) -> Presentation:
    """Inverse-pair relations for 4-cells fwd: hi -> lo-identity, rev opposite.

    lo is the diagram on which [rev then fwd] is an endo; hi the one for
    [fwd then rev].
    """
    zeros = (0,) * 3
    lhs_a = Diagram(4, source=lo, atoms=(Atom(rev, zeros), Atom(fwd, zeros)))
    rhs_a = Diagram(4, source=lo)
    lhs_b = Diagram(4, source=hi, atoms=(Atom(fwd, zeros), Atom(rev, zeros)))
    rhs_b = Diagram(4, source=hi)
    p = pr.add_relation(p, f"pair_{tag}_a", lhs_a, rhs_a)
    p = pr.add_relation(p, f"pair_{tag}_b", lhs_b, rhs_b)
    return p


def build_adj41() -> Presentation:
    p = _add_cusps(_adjunction_skeleton(4))
    p = pr.add_generator(p, 4, "c_Cl", c.K_L, c.ID3_L)
    p = pr.add_generator(p, 4, "c_Cl_inv", c.ID3_L, c.K_L)
    p = pr.add_generator(p, 4, "u_Cl", c.ID_SNAKE_L, c.KP_L)
    p = pr.add_generator(p, 4, "u_Cl_inv", c.KP_L, c.ID_SNAKE_L)
    p = pr.add_generator(p, 4, "c_Cr", c.K_R, c.ID3_R)
    p = pr.add_generator(p, 4, "c_Cr_inv", c.ID3_R, c.K_R)
    p = pr.add_generator(p, 4, "u_Cr", c.ID_SNAKE_R, c.KP_R)
    p = pr.add_generator(p, 4, "u_Cr_inv", c.KP_R, c.ID_SNAKE_R)
    p = pr.add_generator(p, 4, "SW", c.SW_SRC, c.ID_D_ETA)
    p = pr.add_generator(p, 4, "SW_inv", c.ID_D_ETA, c.SW_SRC)
    p = _pair_relations(p, "c_Cl", "c_Cl_inv", c.ID3_L, c.K_L, "c_Cl")
    p = _pair_relations(p, "u_Cl_inv", "u_Cl", c.ID_SNAKE_L, c.KP_L, "u_Cl")
    p = _pair_relations(p, "c_Cr", "c_Cr_inv", c.ID3_R, c.K_R, "c_Cr")
    p = _pair_relations(p, "u_Cr_inv", "u_Cr", c.ID_SNAKE_R, c.KP_R, "u_Cr")
    p = _pair_relations(p, "SW", "SW_inv", c.ID_D_ETA, c.SW_SRC, "SW")
    # snake relations making each cusp pair an adjoint equivalence
    p = pr.add_relation(p, "snake_C_l", _snake4("u_Cl", "c_Cl", c.T_CL), c.ID_T_CL)
    p = pr.add_relation(p, "snake_C_r", _snake4("u_Cr", "c_Cr", c.T_CR), c.ID_T_CR)
    return p


def _snake4(unit: str, counit: str, base: Diagram) -> Diagram:
    """The triangle composite one dimension up: unit below, counit above.

    Mirrors the 2-dimensional snake [eta@0, eps@1] with a cusp atom in
    place of the l strand: insert the unit pair before the strand atom,
    cancel the counit across the old strand.
    """
    zeros = (0,) * 3
    return Diagram(4, source=base, atoms=(Atom(unit, zeros), Atom(counit, (1, 0, 0))))


def _snake4_other(unit: str, counit: str, base: Diagram) -> Diagram:
    """The other triangle: unit on the far side, mirroring [eta@1, eps@0]."""
    zeros = (0,) * 3
    return Diagram(4, source=base, atoms=(Atom(unit, (1, 0, 0)), Atom(counit, zeros)))


def build_adj41_minus() -> Presentation:
    p = build_adj41()
    keep = tuple(r for r in p.relations if r.name not in ("snake_C_l", "snake_C_r"))
    return Presentation(n=p.n, cells=p.cells, relations=keep)


def build_adj41_plus() -> Presentation:
    p = build_adj41()
    p = pr.add_relation(
        p, "snake_C_l_inv", _snake4_other("u_Cl", "c_Cl", c.T_CL_INV), c.ID_T_CL_INV
    )
    p = pr.add_relation(
        p, "snake_C_r_inv", _snake4_other("u_Cr", "c_Cr", c.T_CR_INV), c.ID_T_CR_INV
    )
    # snakes of the opposite adjunction, built from the inverse 4-cells
    p = pr.add_relation(
        p, "snake2_C_l", _snake4_other("c_Cl_inv", "u_Cl_inv", c.T_CL), c.ID_T_CL
    )
    p = pr.add_relation(
        p, "snake2_C_r", _snake4_other("c_Cr_inv", "u_Cr_inv", c.T_CR), c.ID_T_CR
    )
    p = pr.add_relation(
        p, "snake2_C_l_inv", _snake4("c_Cl_inv", "u_Cl_inv", c.T_CL_INV), c.ID_T_CL_INV
    )
    p = pr.add_relation(
        p, "snake2_C_r_inv", _snake4("c_Cr_inv", "u_Cr_inv", c.T_CR_INV), c.ID_T_CR_INV
    )
    return p


def build_eq_adj2() -> Presentation:
    """Free adjoint equivalence on one 1-cell, at dimension 2.

    Invertible unit/counit, their four invertibility relations, and a
    single snake; the other snake is derived (bundle B12_adjeq_snake).
    """
    p = pr.new_presentation(2)
    p = pr.add_generator(p, 0, "X")
    p = pr.add_generator(p, 0, "Y")
    p = pr.add_generator(p, 1, "l", c.X, c.Y)
    p = pr.add_generator(p, 1, "r", c.Y, c.X)
    p = pr.add_generator(p, 2, "eta", c.ID_X, c.PATH_LR)
    p = pr.add_generator(p, 2, "eta_inv", c.PATH_LR, c.ID_X)
    p = pr.add_generator(p, 2, "eps", c.PATH_RL, c.ID_Y)
    p = pr.add_generator(p, 2, "eps_inv", c.ID_Y, c.PATH_RL)
    id_idx = Diagram(2, source=c.ID_X)
    id_lr = Diagram(2, source=c.PATH_LR)
    id_rl = Diagram(2, source=c.PATH_RL)
    id_idy = Diagram(2, source=c.ID_Y)
    p = pr.add_relation(
        p, "pair_eta_a",
        Diagram(2, source=c.ID_X, atoms=(Atom("eta", (0,)), Atom("eta_inv", (0,)))), id_idx,
    )
    p = pr.add_relation(
        p, "pair_eta_b",
        Diagram(2, source=c.PATH_LR, atoms=(Atom("eta_inv", (0,)), Atom("eta", (0,)))), id_lr,
    )
    p = pr.add_relation(
        p, "pair_eps_a",
        Diagram(2, source=c.PATH_RL, atoms=(Atom("eps", (0,)), Atom("eps_inv", (0,)))), id_rl,
    )
    p = pr.add_relation(
        p, "pair_eps_b",
        Diagram(2, source=c.ID_Y, atoms=(Atom("eps_inv", (0,)), Atom("eps", (0,)))), id_idy,
    )
    p = pr.add_relation(p, "snake_l", c.SNAKE_L, c.ID2_L)
    return p


@lru_cache(maxsize=None)
def build_presentation(name: str) -> Presentation:
    """Resolve a registry name; the registry is closed and total."""
    if name in THETA_NAMES:
        return pr.theta(int(name[-1]))
    builders = {
        "Adj31": build_adj31,
        "Adj31Plus": build_adj31_plus,
        "Adj41": build_adj41,
        "Adj41Minus": build_adj41_minus,
        "Adj41Plus": build_adj41_plus,
        "EqAdj2": build_eq_adj2,
    }
    if name in builders:
        return builders[name]()
    if name in ("Adj41PlusPlus", "Adj41PlusPlusPlus", "Adj41Max"):
        # the enlargements embed the derived swallowtail composites; they
        # live in enlargements.py, imported lazily to stay acyclic
        from . import enlargements as en

        return {
            "Adj41PlusPlus": en.build_adj41_plus_plus,
            "Adj41PlusPlusPlus": en.build_adj41_plus3,
            "Adj41Max": en.build_adj41_max,
        }[name]()
    raise KeyError(f"unknown presentation {name!r}")
