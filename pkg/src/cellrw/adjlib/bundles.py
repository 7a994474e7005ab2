"""The sixteen shipped proof bundles and the derived-diagram registry.

Each bundle packages a context (a registry presentation or a hypothesis
extension of one), two parallel diagrams, and a replayable derivation.
Chains live in chains.py; the hypothesis contexts encode unknown transfor
components as fresh boxes with their defining or naturality relations.
"""

from __future__ import annotations

from functools import lru_cache

from .. import presentation as pr
from .. import rewrite as rw
from ..diagram import Atom, Diagram
from ..presentation import Presentation
from . import chains as ch
from . import core as c
from .presentations import build_presentation, _pair_relations

BUNDLE_NAMES = (
    "B1_butterfly1",
    "B2_butterfly2",
    "B3a_flip_SW",
    "B3b_flip_SW2",
    "B4_barbutterfly_a",
    "B4_barbutterfly_b",
    "B5_bend_right",
    "B6_aswdef",
    "B7_mcldef",
    "B8_mcrdef",
    "B9_aaudef",
    "B10_aacdef",
    "B11_Ar_identity",
    "B12_adjeq_snake",
    "B13_adjplus_snakes",
    "B14_sw2_uniqueness",
)

DERIVED_NAMES = (
    "SW2", "SW2_inv", "SWbar", "SWbar_inv", "SW2bar", "SW2bar_inv",
    "alpha_Cl_inv", "alpha_Cl", "alpha_Cr_inv", "m_u", "A_r",
)


def _endo_pair(p: Presentation, name: str, base: Diagram) -> Presentation:
    """A fresh invertible endo-box: two generators plus the two inverse laws."""
    zeros = (0, 0, 0)
    p = pr.add_generator(p, 4, name, base, base)
    p = pr.add_generator(p, 4, name + "_inv", base, base)
    idb = Diagram(4, source=base)
    p = pr.add_relation(
        p, f"pair_{name}_a",
        Diagram(4, source=base, atoms=(Atom(name, zeros), Atom(name + "_inv", zeros))), idb)
    p = pr.add_relation(
        p, f"pair_{name}_b",
        Diagram(4, source=base, atoms=(Atom(name + "_inv", zeros), Atom(name, zeros))), idb)
    return p


def _inverse_box(p: Presentation, box: str, composite: Diagram) -> Presentation:
    """A fresh box constrained to invert a given composite."""
    base = composite.source
    p = pr.add_generator(p, 4, box, base, base)
    idb = Diagram(4, source=base)
    p = pr.add_relation(
        p, f"pair_{box}_a",
        Diagram(4, source=base, atoms=(Atom(box, (0, 0, 0)),) + composite.atoms), idb)
    p = pr.add_relation(
        p, f"pair_{box}_b",
        Diagram(4, source=base, atoms=composite.atoms + (Atom(box, (0, 0, 0)),)), idb)
    return p


@lru_cache(maxsize=None)
def ctx_sw_double() -> Presentation:
    """Adj41 plus a second swallowtail pair: the two lifts of SW under
    functors agreeing on the 3-skeleton."""
    p = build_presentation("Adj41")
    p = pr.add_generator(p, 4, "SW_G", c.SW_SRC, c.ID_D_ETA)
    p = pr.add_generator(p, 4, "SW_G_inv", c.ID_D_ETA, c.SW_SRC)
    return _pair_relations(p, "SW_G", "SW_G_inv", c.ID_D_ETA, c.SW_SRC, "SW_G")


@lru_cache(maxsize=None)
def ctx_b6() -> Presentation:
    """B6: fresh box for the C_l-inverse component plus its naturality."""
    p = ctx_sw_double()
    p = pr.add_generator(p, 4, "a_Clinv", c.T_CL_INV, c.T_CL_INV)
    return pr.add_relation(
        p, "alpha_SW",
        Diagram(4, source=c.SW_SRC,
                atoms=(Atom("a_Clinv", (0, 1, 0)), Atom("SW_G", (0, 0, 0)))),
        Diagram(4, source=c.SW_SRC, atoms=(Atom("SW", (0, 0, 0)),)))


@lru_cache(maxsize=None)
def ctx_b7() -> Presentation:
    """B7: invertible component box on C_l and a unit box inverting its
    counit conjugate."""
    p = build_presentation("Adj41")
    p = _endo_pair(p, "a_Cl", c.T_CL)
    return _inverse_box(p, "m_u", ch.M7)


@lru_cache(maxsize=None)
def ctx_b8() -> Presentation:
    """B8: component box on C_r plus the swallowtail naturality hypothesis."""
    p = build_presentation("Adj41")
    p = _endo_pair(p, "a_Cr", c.T_CR)
    return pr.add_relation(
        p, "alpha_SW",
        Diagram(4, source=c.SW_SRC,
                atoms=(Atom("a_Cr", (2, 1, 1)), Atom("SW", (0, 0, 0)))),
        Diagram(4, source=c.SW_SRC, atoms=(Atom("SW", (0, 0, 0)),)))


@lru_cache(maxsize=None)
def ctx_b9() -> Presentation:
    """B9: invertible unit box plus an r-component box inverting its
    counit conjugate."""
    p = build_presentation("Adj41")
    p = _endo_pair(p, "m_u", c.ID_D_ETA)
    return _inverse_box(p, "A_r", ch.M9)


@lru_cache(maxsize=None)
def ctx_b10() -> Presentation:
    """B10: counit component box plus its naturality under the left cusp."""
    p = build_presentation("Adj41")
    p = _endo_pair(p, "m_c", c.ID_D_EPS)
    return pr.add_relation(
        p, "m_C_l",
        Diagram(4, source=c.T_CL, atoms=(Atom("m_c", (0, 1, 1)),)),
        Diagram(4, source=c.T_CL))


@lru_cache(maxsize=None)
def ctx_b11() -> Presentation:
    """B11: r-component box plus its naturality under the unit."""
    p = build_presentation("Adj41")
    p = _endo_pair(p, "A_r", c.ID3_R)
    return pr.add_relation(
        p, "A_u",
        Diagram(4, source=c.ID_D_ETA, atoms=(Atom("A_r", (0, 1, 1)),)),
        Diagram(4, source=c.ID_D_ETA))


@lru_cache(maxsize=None)
def ctx_b14() -> Presentation:
    """B14: a rival second swallowtail pair constrained by the butterflies."""
    p = build_presentation("Adj41Plus")
    p = pr.add_generator(p, 4, "SW2_G", c.SW2_SRC, c.ID_D_EPS)
    p = pr.add_generator(p, 4, "SW2_G_inv", c.ID_D_EPS, c.SW2_SRC)
    p = _pair_relations(p, "SW2_G", "SW2_G_inv", c.ID_D_EPS, c.SW2_SRC, "SW2_G")
    p = pr.add_relation(
        p, "butterfly_1_G",
        Diagram(4, source=c.T_CR,
                atoms=(Atom("c_Cr_inv", (0, 1, 0)), Atom("SW_inv", (1, 1, 1)),
                       Atom("SW2_G", (0, 1, 0)))),
        c.ID_T_CR)
    p = pr.add_relation(
        p, "butterfly_2_G",
        Diagram(4, source=c.T_CL_INV,
                atoms=(Atom("c_Cr_inv", (1, 1, 1)), Atom("SW_inv", (2, 1, 2)),
                       Atom("SW2_G", (1, 1, 1)))),
        c.ID_T_CL_INV)
    return p


@lru_cache(maxsize=None)
def ctx_afinal() -> Presentation:
    """Doubled cusp 4-cells: the freedom left after fixing the swallowtail."""
    p = build_presentation("Adj41")
    for tag, lo, hi in (
        ("c_Cl_G", c.ID3_L, c.K_L), ("u_Cl_G", c.ID_SNAKE_L, c.KP_L),
        ("c_Cr_G", c.ID3_R, c.K_R), ("u_Cr_G", c.ID_SNAKE_R, c.KP_R),
    ):
        if tag.startswith("c"):
            p = pr.add_generator(p, 4, tag, hi, lo)
            p = pr.add_generator(p, 4, tag + "_inv", lo, hi)
            p = _pair_relations(p, tag, tag + "_inv", lo, hi, tag)
        else:
            p = pr.add_generator(p, 4, tag, lo, hi)
            p = pr.add_generator(p, 4, tag + "_inv", hi, lo)
            p = _pair_relations(p, tag + "_inv", tag, lo, hi, tag)
    return p


def _bundle(name, context, lhs, rhs, steps, doc):
    deriv = rw.Derivation(context, lhs, tuple(steps))
    return rw.ProofBundle(name, context, lhs, rhs, deriv, doc)


@lru_cache(maxsize=None)
def build_bundle(name: str) -> rw.ProofBundle:
    p41 = build_presentation("Adj41")
    steps = ch.CHAINS.get(name, ())
    if name == "B1_butterfly1":
        lhs = Diagram(4, source=c.T_CR,
                      atoms=(Atom("c_Cr_inv", (0, 1, 0)), Atom("SW_inv", (1, 1, 1)),
                             Atom("SW", (1, 1, 1)), Atom("c_Cr", (0, 1, 0))))
        return _bundle(name, p41, lhs, c.ID_T_CR, steps,
                       "First butterfly: the second swallowtail (spliced as its "
                       "defining composite) against the inverse swallowtail is the "
                       "identity on the r-cusp.")
    if name == "B2_butterfly2":
        lhs = Diagram(4, source=c.T_CL_INV,
                      atoms=(Atom("c_Cr_inv", (1, 1, 1)), Atom("SW_inv", (2, 1, 2)),
                             Atom("SW", (2, 1, 2)), Atom("c_Cr", (1, 1, 1))))
        return _bundle(name, p41, lhs, c.ID_T_CL_INV, steps,
                       "Second butterfly: the same pairing anchored at the inverse "
                       "l-cusp.")
    if name == "B3a_flip_SW":
        lhs = Diagram(4, source=c.ID_D_ETA,
                      atoms=(Atom("c_Cl_inv", (0, 1, 0)), Atom("SW_inv", (1, 1, 0)),
                             Atom("SW", (1, 1, 0)), Atom("c_Cl", (0, 1, 0))))
        return _bundle(name, p41, lhs, Diagram(4, source=c.ID_D_ETA), steps,
                       "Flip for the barred swallowtail: its inverse (spliced) "
                       "followed by its unwinding is the identity on the unit.")
    if name == "B3b_flip_SW2":
        lhs = Diagram(4, source=c.ID_D_EPS,
                      atoms=(Atom("c_Cl_inv", (0, 0, 1)), Atom("SW_inv", (1, 0, 1)),
                             Atom("SW", (1, 0, 1)), Atom("c_Cl", (0, 0, 1))))
        return _bundle(name, p41, lhs, Diagram(4, source=c.ID_D_EPS), steps,
                       "Flip for the barred second swallowtail, on the counit.")
    if name in ("B4_barbutterfly_a", "B4_barbutterfly_b"):
        lhs = Diagram(4, source=c.T_CR_INV,
                      atoms=(Atom("c_Cl_inv", (1, 1, 1)), Atom("SW_inv", (2, 1, 1)),
                             Atom("SW", (2, 1, 1)), Atom("c_Cl", (1, 1, 1))))
        which = "first" if name.endswith("_a") else "second"
        return _bundle(name, p41, lhs, c.ID_T_CR_INV, steps,
                       f"Barred butterfly ({which} reading order): both companion "
                       "swallowtails spliced over the inverse r-cusp cancel.")
    if name == "B5_bend_right":
        lhs = Diagram(4, source=c.ID_D_EPS,
                      atoms=(Atom("c_Cr_inv", (0, 0, 0)), Atom("SW_inv", (1, 0, 1)),
                             Atom("SW", (1, 0, 1)), Atom("c_Cr", (0, 0, 0))))
        rhs = Diagram(4, source=c.ID_D_EPS,
                      atoms=(Atom("c_Cl_inv", (0, 0, 1)), Atom("SW_inv", (1, 0, 1)),
                             Atom("SW", (1, 0, 1)), Atom("c_Cl", (0, 0, 1))))
        return _bundle(name, p41, lhs, rhs, steps,
                       "Bending the fold through the r-cusp pair equals bending it "
                       "through the l-cusp pair.")
    if name == "B6_aswdef":
        return _bundle(name, ctx_b6(), ch.B6_LHS, ch.B6_RHS, steps,
                       "Given the swallowtail naturality, the C_l-inverse component "
                       "is forced to be the swallowtail against the rival inverse.")
    if name == "B7_mcldef":
        return _bundle(name, ctx_b7(), ch.B7_LHS, ch.B7_RHS, steps,
                       "The unit modification box inverts the counit conjugate of "
                       "the C_l component.")
    if name == "B8_mcrdef":
        return _bundle(name, ctx_b8(), ch.B8_LHS, ch.B8_RHS, steps,
                       "Given swallowtail naturality, the C_r component whiskered "
                       "at its corner of the fold is the identity.")
    if name == "B9_aaudef":
        return _bundle(name, ctx_b9(), ch.B9_LHS, ch.B9_RHS, steps,
                       "The r perturbation box inverts the counit conjugate of the "
                       "unit modification box.")
    if name == "B10_aacdef":
        return _bundle(name, ctx_b10(), ch.B10_LHS, ch.B10_RHS, steps,
                       "A counit component trivial under the left cusp dies against "
                       "the snake collapse.")
    if name == "B11_Ar_identity":
        return _bundle(name, ctx_b11(), ch.B11_LHS, ch.B11_RHS, steps,
                       "An r perturbation trivial under the unit vanishes inside "
                       "the r snake.")
    if name == "B12_adjeq_snake":
        p2 = build_presentation("EqAdj2")
        return _bundle(name, p2, c.SNAKE_R, c.ID2_R, steps,
                       "For an adjoint equivalence, one snake relation implies the "
                       "other (dimension-2 chain).")
    if name == "B13_adjplus_snakes":
        plus = build_presentation("Adj41Plus")
        rel = plus.relation("snake_C_l_inv")
        return _bundle(name, p41, rel.lhs, rel.rhs, steps,
                       "The inverse-side snake for the l-cusp adjunction follows "
                       "from the shipped relations; the remaining five plus-snakes "
                       "are certified inside the retraction morphism.")
    if name == "B14_sw2_uniqueness":
        return _bundle(name, ctx_b14(), ch.B14_LHS, ch.B14_RHS, steps,
                       "The butterflies pin any rival second swallowtail to the "
                       "canonical composite, inside the butterfly context.")
    raise KeyError(name)


@lru_cache(maxsize=None)
def derived_diagram(name: str) -> Diagram:
    """Registry of derived composites; each is valid over its context:
    SW2*/SWbar* over Adj41, alpha_* over the doubled contexts, m_u/A_r
    single boxes over their bundle contexts."""
    table = {
        "SW2": ch.SW2_DEF,
        "SWbar": ch.SWBAR_DEF,
        "SW2bar": ch.SW2BAR_DEF,
        "alpha_Cl_inv": ch.ALPHA_CL_INV,
        "alpha_Cl": ch.ALPHA_CL,
        "alpha_Cr_inv": ch.ALPHA_CR_INV,
        "m_u": Diagram(4, source=c.ID_D_ETA, atoms=(Atom("m_u", (0, 0, 0)),)),
        "A_r": Diagram(4, source=c.ID3_R, atoms=(Atom("A_r", (0, 0, 0)),)),
    }
    if name in table:
        return table[name]
    if name in ("SW2_inv", "SWbar_inv", "SW2bar_inv"):
        return reverse_composite(table[name[:-4]], build_presentation("Adj41"))
    raise KeyError(name)


def derived_context(name: str) -> Presentation:
    """The presentation a derived diagram lives over."""
    if name in ("SW2", "SW2_inv", "SWbar", "SWbar_inv", "SW2bar", "SW2bar_inv"):
        return build_presentation("Adj41")
    if name == "alpha_Cl_inv":
        return ctx_sw_double()
    if name in ("alpha_Cl", "alpha_Cr_inv"):
        return ctx_afinal()
    if name == "m_u":
        return ctx_b7()
    if name == "A_r":
        return ctx_b9()
    raise KeyError(name)


def reverse_composite(d: Diagram, sig) -> Diagram:
    """The inverse composite: atoms inverted in reverse order."""
    from .. import diagram as dg
    from ..diagram import SWAP

    def inv(a: Atom) -> Atom:
        if a.gen == SWAP:
            return a
        return Atom(a.gen[:-4] if a.gen.endswith("_inv") else a.gen + "_inv", a.pos)

    tgt = dg.boundary(d, dg.TGT, sig)
    return Diagram(d.dim, source=tgt, atoms=tuple(inv(a) for a in reversed(d.atoms)))
