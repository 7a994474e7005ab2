"""Shared diagram constructors for the free-adjunction presentations.

Names follow ASCII transliterations: eta/eps for the unit/counit, C_l and
C_l_inv for the cusp pair, u_Cl/c_Cl for the unit/counit one dimension up,
SW for the swallowtail.  All coordinates are reconstructed from boundary
constraints and validated in tests.
"""

from __future__ import annotations

from ..diagram import Atom, Diagram, SWAP, point

X = point("X")
Y = point("Y")

ID_X = Diagram(1, source=X)
ID_Y = Diagram(1, source=Y)
PATH_L = Diagram(1, source=X, atoms=(Atom("l", ()),))
PATH_R = Diagram(1, source=Y, atoms=(Atom("r", ()),))
PATH_LR = Diagram(1, source=X, atoms=(Atom("l", ()), Atom("r", ())))
PATH_RL = Diagram(1, source=Y, atoms=(Atom("r", ()), Atom("l", ())))

# unit and counit as one-atom 2-diagrams
D_ETA = Diagram(2, source=ID_X, atoms=(Atom("eta", (0,)),))
D_EPS = Diagram(2, source=PATH_RL, atoms=(Atom("eps", (0,)),))

ID2_L = Diagram(2, source=PATH_L)
ID2_R = Diagram(2, source=PATH_R)

# triangle composites: l bends through l.r.l, r through r.l.r
SNAKE_L = Diagram(2, source=PATH_L, atoms=(Atom("eta", (0,)), Atom("eps", (1,))))
SNAKE_R = Diagram(2, source=PATH_R, atoms=(Atom("eta", (1,)), Atom("eps", (0,))))

# one-atom 3-diagrams for the cusp cells
T_CL = Diagram(3, source=SNAKE_L, atoms=(Atom("C_l", (0, 0)),))
T_CL_INV = Diagram(3, source=ID2_L, atoms=(Atom("C_l_inv", (0, 0)),))
T_CR = Diagram(3, source=SNAKE_R, atoms=(Atom("C_r", (0, 0)),))
T_CR_INV = Diagram(3, source=ID2_R, atoms=(Atom("C_r_inv", (0, 0)),))

ID3_L = Diagram(3, source=ID2_L)
ID3_R = Diagram(3, source=ID2_R)
ID_SNAKE_L = Diagram(3, source=SNAKE_L)
ID_SNAKE_R = Diagram(3, source=SNAKE_R)

# cusp round trips: K_L = C_l_inv then C_l (an endo of the identity on l),
# KP_L = C_l then C_l_inv (an endo of the snake)
K_L = Diagram(3, source=ID2_L, atoms=(Atom("C_l_inv", (0, 0)), Atom("C_l", (0, 0))))
KP_L = Diagram(3, source=SNAKE_L, atoms=(Atom("C_l", (0, 0)), Atom("C_l_inv", (0, 0))))
K_R = Diagram(3, source=ID2_R, atoms=(Atom("C_r_inv", (0, 0)), Atom("C_r", (0, 0))))
KP_R = Diagram(3, source=SNAKE_R, atoms=(Atom("C_r", (0, 0)), Atom("C_r_inv", (0, 0))))

ID_D_ETA = Diagram(3, source=D_ETA)
ID_D_EPS = Diagram(3, source=D_EPS)

# The swallowtail source: sprout a snake on the unit's l leg, slide the
# two units past each other, read off an r snake.
SW_SRC = Diagram(
    3,
    source=D_ETA,
    atoms=(Atom("C_l_inv", (1, 0)), Atom(SWAP, (0,)), Atom("C_r", (1, 1))),
)

# Companion swallowtails.  The bare three-atom folds on the counit (and
# the reversed fold on the unit) are unreachable in this move calculus:
# the count of cusp atoms anchored at a fixed strand minus their inverses
# is conserved by every move, and a swap wedged between overlapping
# insert/consume blocks can never be consumed.  The shipped sources are
# therefore the minimal derivable representatives: the same swallowtail
# fold happening on a unit born from a cusp pair, conjugated under the
# identity (SWbar), or under the counit (SW2, SW2bar).
SWBAR_SRC = Diagram(
    3,
    source=D_ETA,
    atoms=(
        Atom("C_l_inv", (1, 0)),
        Atom("C_l_inv", (2, 0)),
        Atom(SWAP, (1,)),
        Atom("C_r", (2, 1)),
        Atom("C_l", (1, 0)),
    ),
)
SW2_SRC = Diagram(
    3,
    source=D_EPS,
    atoms=(
        Atom("C_r_inv", (0, 0)),
        Atom("C_l_inv", (1, 1)),
        Atom(SWAP, (0,)),
        Atom("C_r", (1, 2)),
        Atom("C_r", (0, 0)),
    ),
)
SW2BAR_SRC = Diagram(
    3,
    source=D_EPS,
    atoms=(
        Atom("C_l_inv", (0, 1)),
        Atom("C_l_inv", (1, 1)),
        Atom(SWAP, (0,)),
        Atom("C_r", (1, 2)),
        Atom("C_l", (0, 1)),
    ),
)

ID_SW_SRC = Diagram(4, source=SW_SRC)
ID_K_L = Diagram(4, source=K_L)
ID_KP_L = Diagram(4, source=KP_L)
ID_K_R = Diagram(4, source=K_R)
ID_KP_R = Diagram(4, source=KP_R)
ID2_D_ETA = Diagram(4, source=ID_D_ETA)
ID4_L = Diagram(4, source=ID3_L)
ID4_R = Diagram(4, source=ID3_R)
ID2_SNAKE_L = Diagram(4, source=ID_SNAKE_L)
ID2_SNAKE_R = Diagram(4, source=ID_SNAKE_R)
ID_T_CL = Diagram(4, source=T_CL)
ID_T_CR = Diagram(4, source=T_CR)
ID_T_CL_INV = Diagram(4, source=T_CL_INV)
ID_T_CR_INV = Diagram(4, source=T_CR_INV)


def atom(gen: str, *pos: int) -> Atom:
    return Atom(gen, tuple(pos))


def diag(dim: int, source: Diagram, *atoms: Atom) -> Diagram:
    return Diagram(dim, source=source, atoms=tuple(atoms))
