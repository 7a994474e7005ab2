"""Authored proof data: shapes and derivation chains (generated).

Produced by scripts/author_all.py; regenerate rather than editing.
"""

from ..diagram import Atom, Diagram, SWAP
from .. import diagram as dg
from ..rewrite import (
    Apply, Embedding, InterchangerInsert, InterchangerRemove,
    Transpose, FORWARD, REVERSE,
)
from . import core as c

A = Atom


def D(dim, src, *atoms):
    return Diagram(dim, source=src, atoms=tuple(atoms))

SW2_DEF = D(4, c.SW2_SRC, A('SW', (1, 0, 1)), A('c_Cr', (0, 0, 0)))
SWBAR_DEF = D(4, c.SWBAR_SRC, A('SW', (1, 1, 0)), A('c_Cl', (0, 1, 0)))
SW2BAR_DEF = D(4, c.SW2BAR_SRC, A('SW', (1, 0, 1)), A('c_Cl', (0, 0, 1)))
ALPHA_CL_INV = D(4, c.T_CL_INV, A('SW_G_inv', (1, 0, 0)), A('SW', (1, 0, 0)))
ALPHA_CL = D(4, c.T_CL, A('u_Cl', (0, 0, 0)), A('u_Cl_G_inv', (0, 0, 0)))
ALPHA_CR_INV = D(4, c.T_CR_INV, A('c_Cr_G_inv', (0, 0, 0)), A('c_Cr', (0, 0, 0)))
M7 = D(4, c.ID_D_ETA, A('c_Cl_inv', (0, 1, 0)), A('a_Cl', (1, 1, 0)), A('c_Cl', (0, 1, 0)))
M9 = D(4, c.ID3_R, A('c_Cr_inv', (0, 0, 0)), A('m_u', (1, 0, 1)), A('c_Cr', (0, 0, 0)))
BUTTERFLY_1_LHS = D(4, c.T_CR, A('c_Cr_inv', (0, 1, 0)), A('SW_inv', (1, 1, 1)), A('SW2', (0, 1, 0)))
BUTTERFLY_2_LHS = D(4, c.T_CL_INV, A('c_Cr_inv', (1, 1, 1)), A('SW_inv', (2, 1, 2)), A('SW2', (1, 1, 1)))
BUTTERFLY_3_LHS = D(4, c.T_CR_INV, A('SWbar_inv', (1, 0, 1)), A('SW2bar', (1, 1, 0)))
BUTTERFLY_3_RHS = c.ID_T_CR_INV
BUTTERFLY_4_LHS = D(4, c.T_CR_INV, A('SW2bar_inv', (1, 1, 0)), A('SWbar', (1, 0, 1)))
BUTTERFLY_4_RHS = c.ID_T_CR_INV
FLIP_1_LHS = D(4, c.ID_D_ETA, A('SWbar_inv', (0, 0, 0)), A('SW', (1, 1, 0)), A('c_Cl', (0, 1, 0)))
FLIP_1_RHS = c.ID2_D_ETA
FLIP_2_LHS = D(4, c.ID_D_EPS, A('SW2bar_inv', (0, 0, 0)), A('SW', (1, 0, 1)), A('c_Cl', (0, 0, 1)))
FLIP_2_RHS = Diagram(4, source=c.ID_D_EPS)
B6_LHS = D(4, c.SW_SRC, A('a_Clinv', (0, 1, 0)))
B6_RHS = D(4, c.SW_SRC, A('SW', (0, 0, 0)), A('SW_G_inv', (0, 0, 0)))
B7_LHS = D(4, c.ID_D_ETA, A('c_Cl_inv', (0, 1, 0)), A('u_Cl', (1, 1, 0)), A('a_Cl', (3, 1, 0)), A('u_Cl_inv', (1, 1, 0)), A('c_Cl', (0, 1, 0)), A('m_u', (0, 0, 0)))
B7_RHS = c.ID2_D_ETA
B8_LHS = D(4, c.SW_SRC, A('a_Cr', (2, 1, 1)))
B8_RHS = c.ID_SW_SRC
B9_LHS = D(4, c.ID3_R, A('c_Cr_inv', (0, 0, 0)), A('u_Cr', (1, 0, 0)), A('m_u', (1, 0, 1)), A('u_Cr_inv', (1, 0, 0)), A('c_Cr', (0, 0, 0)), A('A_r', (0, 0, 0)))
B9_RHS = c.ID4_R
B10_LHS = D(4, c.T_CL, A('u_Cl', (0, 0, 0)), A('c_Cl', (1, 0, 0)), A('m_c', (0, 1, 1)))
B10_RHS = c.ID_T_CL
B11_LHS = D(4, c.ID_SNAKE_R, A('u_Cr', (0, 0, 0)), A('A_r', (2, 1, 2)), A('u_Cr_inv', (0, 0, 0)))
B11_RHS = c.ID2_SNAKE_R
B14_LHS = D(4, c.T_CR, A('c_Cr_inv', (0, 1, 0)), A('SW_inv', (1, 1, 1)), A('SW2_G', (0, 1, 0)))
B14_RHS = D(4, c.T_CR, A('c_Cr_inv', (0, 1, 0)), A('SW_inv', (1, 1, 1)), A('SW', (1, 1, 1)), A('c_Cr', (0, 1, 0)))

CHAINS = {
    'B1_butterfly1': (
        Apply('pair_SW_a', FORWARD, Embedding(1, (1, 1, 1))),
        Apply('pair_c_Cr_a', FORWARD, Embedding(0, (0, 1, 0))),
    ),
    'B2_butterfly2': (
        Apply('pair_SW_a', FORWARD, Embedding(1, (2, 1, 2))),
        Apply('pair_c_Cr_a', FORWARD, Embedding(0, (1, 1, 1))),
    ),
    'B3a_flip_SW': (
        Apply('pair_SW_a', FORWARD, Embedding(1, (1, 1, 0))),
        Apply('pair_c_Cl_a', FORWARD, Embedding(0, (0, 1, 0))),
    ),
    'B3b_flip_SW2': (
        Apply('pair_SW_a', FORWARD, Embedding(1, (1, 0, 1))),
        Apply('pair_c_Cl_a', FORWARD, Embedding(0, (0, 0, 1))),
    ),
    'B4_barbutterfly_a': (
        Apply('pair_SW_a', FORWARD, Embedding(1, (2, 1, 1))),
        Apply('pair_c_Cl_a', FORWARD, Embedding(0, (1, 1, 1))),
    ),
    'B4_barbutterfly_b': (
        Apply('pair_SW_a', FORWARD, Embedding(1, (2, 1, 1))),
        Apply('pair_c_Cl_a', FORWARD, Embedding(0, (1, 1, 1))),
    ),
    'B5_bend_right': (
        Apply('pair_SW_a', FORWARD, Embedding(1, (1, 0, 1))),
        Apply('pair_c_Cr_a', FORWARD, Embedding(0, (0, 0, 0))),
        Apply('pair_c_Cl_a', REVERSE, Embedding(0, (0, 0, 1))),
        Apply('pair_SW_a', REVERSE, Embedding(1, (1, 0, 1))),
    ),
    'B6_aswdef': (
        Apply('pair_SW_G_b', REVERSE, Embedding(1, (0, 0, 0))),
        Apply('alpha_SW', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'B7_mcldef': (
        Transpose(1),
        Apply('pair_u_Cl_a', FORWARD, Embedding(2, (1, 1, 0))),
        Apply('pair_m_u_b', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'B8_mcrdef': (
        Apply('pair_SW_b', REVERSE, Embedding(1, (0, 0, 0))),
        Apply('alpha_SW', FORWARD, Embedding(0, (0, 0, 0))),
        Apply('pair_SW_b', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'B9_aaudef': (
        Transpose(2),
        Apply('pair_u_Cr_a', FORWARD, Embedding(1, (1, 0, 0))),
        Apply('pair_A_r_b', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'B10_aacdef': (
        Apply('m_C_l', FORWARD, Embedding(2, (0, 0, 0))),
        Apply('snake_C_l', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'B11_Ar_identity': (
        Apply('A_u', FORWARD, Embedding(1, (2, 0, 1))),
        Apply('pair_u_Cr_a', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'B12_adjeq_snake': (
        Apply('pair_eta_a', REVERSE, Embedding(0, (1,))),
        Transpose(1),
        Transpose(2),
        Apply('pair_eps_a', REVERSE, Embedding(3, (0,))),
        Transpose(2),
        Apply('snake_l', FORWARD, Embedding(1, (1,))),
        Apply('pair_eps_a', FORWARD, Embedding(1, (0,))),
        Apply('pair_eta_a', FORWARD, Embedding(0, (1,))),
    ),
    'B13_adjplus_snakes': (
        Apply('pair_c_Cl_a', REVERSE, Embedding(0, (0, 0, 0))),
        Transpose(1),
        Transpose(2),
        Apply('pair_u_Cl_b', REVERSE, Embedding(1, (1, 0, 0))),
        Transpose(2),
        Apply('snake_C_l', FORWARD, Embedding(3, (1, 0, 0))),
        Apply('pair_u_Cl_b', FORWARD, Embedding(1, (1, 0, 0))),
        Apply('pair_c_Cl_a', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'B14_sw2_uniqueness': (
        Apply('butterfly_1_G', FORWARD, Embedding(0, (0, 0, 0))),
        Apply('pair_c_Cr_a', REVERSE, Embedding(0, (0, 1, 0))),
        Apply('pair_SW_a', REVERSE, Embedding(1, (1, 1, 1))),
    ),
}

B13_EXTRA = {
    'snake2_C_l': (
        Apply('snake_C_l', REVERSE, Embedding(2, (0, 0, 0))),
        Apply('pair_u_Cl_b', FORWARD, Embedding(1, (0, 0, 0))),
        Apply('pair_c_Cl_a', FORWARD, Embedding(0, (1, 0, 0))),
    ),
    'snake2_C_l_inv': (
        Apply('pair_c_Cl_a', REVERSE, Embedding(1, (0, 0, 0))),
        Transpose(0),
        Transpose(2),
        Apply('snake_C_l', REVERSE, Embedding(1, (1, 0, 0))),
        Apply('pair_c_Cl_b', FORWARD, Embedding(2, (2, 0, 0))),
        Transpose(1),
        Apply('pair_u_Cl_b', FORWARD, Embedding(1, (1, 0, 0))),
        Apply('pair_c_Cl_a', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'snake2_C_r': (
        Apply('snake_C_r', REVERSE, Embedding(2, (0, 0, 0))),
        Apply('pair_u_Cr_b', FORWARD, Embedding(1, (0, 0, 0))),
        Apply('pair_c_Cr_a', FORWARD, Embedding(0, (1, 0, 0))),
    ),
    'snake2_C_r_inv': (
        Apply('pair_c_Cr_a', REVERSE, Embedding(1, (0, 0, 0))),
        Transpose(0),
        Transpose(2),
        Apply('snake_C_r', REVERSE, Embedding(1, (1, 0, 0))),
        Apply('pair_c_Cr_b', FORWARD, Embedding(2, (2, 0, 0))),
        Transpose(1),
        Apply('pair_u_Cr_b', FORWARD, Embedding(1, (1, 0, 0))),
        Apply('pair_c_Cr_a', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'snake_C_l_inv': (
        Apply('pair_c_Cl_a', REVERSE, Embedding(0, (0, 0, 0))),
        Transpose(1),
        Transpose(2),
        Apply('pair_u_Cl_b', REVERSE, Embedding(1, (1, 0, 0))),
        Transpose(2),
        Apply('snake_C_l', FORWARD, Embedding(3, (1, 0, 0))),
        Apply('pair_u_Cl_b', FORWARD, Embedding(1, (1, 0, 0))),
        Apply('pair_c_Cl_a', FORWARD, Embedding(0, (0, 0, 0))),
    ),
    'snake_C_r_inv': (
        Apply('pair_c_Cr_a', REVERSE, Embedding(0, (0, 0, 0))),
        Transpose(1),
        Apply('pair_u_Cr_b', REVERSE, Embedding(1, (1, 0, 0))),
        Transpose(1),
        Apply('pair_u_Cr_b', FORWARD, Embedding(2, (3, 0, 0))),
        Transpose(2),
        Apply('snake_C_r', FORWARD, Embedding(1, (1, 0, 0))),
        Apply('pair_c_Cr_a', FORWARD, Embedding(0, (0, 0, 0))),
    ),
}

MAX_EXTRA_RELATIONS = {
    'flip_3': (D(4, c.ID_D_ETA, A('c_Cl_inv', (0, 1, 0)), A('SW_inv', (1, 1, 0)), A('SWbar', (0, 0, 0))), c.ID2_D_ETA),
    'flip_4': (D(4, c.ID_D_EPS, A('c_Cl_inv', (0, 0, 1)), A('SW_inv', (1, 0, 1)), A('SW2bar', (0, 0, 0))), Diagram(4, source=c.ID_D_EPS)),
    'flip_5': (D(4, c.SWBAR_SRC, A('SWbar', (0, 0, 0))), D(4, c.SWBAR_SRC, A('SW', (1, 1, 0)), A('c_Cl', (0, 1, 0)))),
    'flip_6': (D(4, c.SW2BAR_SRC, A('SW2bar', (0, 0, 0))), D(4, c.SW2BAR_SRC, A('SW', (1, 0, 1)), A('c_Cl', (0, 0, 1)))),
    'flip_7': (D(4, c.ID_D_ETA, A('SWbar_inv', (0, 0, 0))), D(4, c.ID_D_ETA, A('c_Cl_inv', (0, 1, 0)), A('SW_inv', (1, 1, 0)))),
    'flip_8': (D(4, c.ID_D_EPS, A('SW2bar_inv', (0, 0, 0))), D(4, c.ID_D_EPS, A('c_Cl_inv', (0, 0, 1)), A('SW_inv', (1, 0, 1)))),
    'butterfly_5': (D(4, c.T_CR, A('SW2_inv', (0, 1, 0)), A('SW', (1, 1, 1)), A('c_Cr', (0, 1, 0))), c.ID_T_CR),
    'butterfly_6': (D(4, c.T_CL_INV, A('SW2_inv', (1, 1, 1)), A('SW', (2, 1, 2)), A('c_Cr', (1, 1, 1))), c.ID_T_CL_INV),
    'butterfly_7': (D(4, c.T_CR_INV, A('SW2bar_inv', (1, 1, 0)), A('SWbar', (1, 0, 1))), c.ID_T_CR_INV),
    'butterfly_8': (D(4, c.T_CR_INV, A('SWbar_inv', (1, 0, 1)), A('SW2bar', (1, 1, 0))), c.ID_T_CR_INV),
}
