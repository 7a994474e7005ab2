"""Presentation morphisms: generator assignments with relation certificates.

A morphism sends each source generator to a target diagram of equal
dimension and certifies each source relation by an explicit derivation
between the images of its two sides.  Functoriality is replayed, never
decided.

The pushforward used by eval assumes assignments are shape-rigid below
the top dimension of the diagram being mapped: cells of lower dimension
must map to single-atom diagrams whose boundaries have the same atom
counts.  Top-dimensional cells may map to arbitrary composites.  All
registry morphisms satisfy this.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import diagram as dg
from . import rewrite as rw
from .diagram import Atom, Diagram, SWAP
from .presentation import Presentation


class FunctorError(Exception):
    pass


class UnknownCell(FunctorError):
    pass


class Mismatch(FunctorError):
    pass


@dataclass(frozen=True)
class PresentationMorphism:
    source: Presentation
    target: Presentation
    assignment: dict
    certificates: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, PresentationMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.assignment == other.assignment
            and self.certificates == other.certificates
        )


def identity_morphism(p: Presentation) -> PresentationMorphism:
    from .presentation import cell_diagram

    assignment = {
        c.name: (dg.point(c.name) if c.dim == 0 else cell_diagram(p, c.name)) for c in p.cells
    }
    # identity certificate: lhs -> rhs by applying the relation itself once
    certs = {
        r.name: rw.Derivation(
            p, r.lhs, (rw.Apply(r.name, rw.FORWARD, rw.Embedding(0, (0,) * (r.dim - 1))),)
        )
        for r in p.relations
    }
    return PresentationMorphism(p, p, assignment, certs)


def inclusion_morphism(
    sub: Presentation, sup: Presentation, relation_map: Optional[dict] = None
) -> PresentationMorphism:
    """Cell-wise inclusion; each relation certified by its counterpart in sup.

    relation_map renames relations when the ambient presentation uses
    different ids; defaults to the identity mapping.
    """
    from .presentation import cell_diagram

    for c in sub.cells:
        if not sup.has_cell(c.name) or sup.cell_dim(c.name) != c.dim:
            raise UnknownCell(c.name)
    assignment = {
        c.name: (dg.point(c.name) if c.dim == 0 else cell_diagram(sup, c.name)) for c in sub.cells
    }
    rmap = relation_map or {}
    certs = {}
    for r in sub.relations:
        ambient = rmap.get(r.name, r.name)
        if not sup.has_relation(ambient):
            raise Mismatch(f"relation {r.name!r} has no counterpart {ambient!r}")
        certs[r.name] = rw.Derivation(
            sup, r.lhs, (rw.Apply(ambient, rw.FORWARD, rw.Embedding(0, (0,) * (r.dim - 1))),)
        )
    return PresentationMorphism(sub, sup, assignment, certs)


def image_atoms(f: PresentationMorphism, a: Atom) -> tuple[Atom, ...]:
    """The atom block replacing one atom occurrence under the morphism."""
    if a.gen == SWAP:
        return (a,)
    img = f.assignment.get(a.gen)
    if img is None:
        raise UnknownCell(a.gen)
    return tuple(b.shifted(a.pos) for b in img.atoms)


def eval_morphism(f: PresentationMorphism, d: Diagram) -> Diagram:
    """Pushforward of a diagram: atom-wise substitution with re-coordination."""
    if d.dim == 0:
        img = f.assignment.get(d.base)
        if img is None:
            raise UnknownCell(d.base)
        if img.dim != 0:
            raise Mismatch(f"image of 0-cell {d.base!r} has dimension {img.dim}")
        return img
    src = eval_morphism(f, d.source)
    atoms: list[Atom] = []
    for a in d.atoms:
        atoms.extend(image_atoms(f, a))
    return Diagram(dim=d.dim, source=src, atoms=tuple(atoms))


# -- functoriality checking ---------------------------------------------------

BOUNDARY_INCOMPAT = "boundary_incompat"
CERTIFICATE_FAILED = "certificate_failed"
ASSIGNMENT_INVALID = "assignment_invalid"


@dataclass(frozen=True)
class MorphismReport:
    code: str
    detail: str = ""
    cell: Optional[str] = None
    relation: Optional[str] = None
    step: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.code == dg.OK

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        where = self.cell or self.relation or ""
        return f"{self.code}({where}): {self.detail}"


MORPHISM_OK = MorphismReport(dg.OK)


def check_morphism(f: PresentationMorphism) -> MorphismReport:
    """Ok iff boundaries commute for every generator and every relation
    certificate replays between the images of its sides."""
    for c in f.source.cells:
        img = f.assignment.get(c.name)
        if img is None:
            return MorphismReport(ASSIGNMENT_INVALID, cell=c.name, detail="no image")
        if img.dim != c.dim:
            return MorphismReport(ASSIGNMENT_INVALID, cell=c.name, detail="dimension mismatch")
        v = dg.validate(img, f.target)
        if not v.ok:
            return MorphismReport(ASSIGNMENT_INVALID, cell=c.name, detail=str(v))
        if c.dim >= 1:
            want_src = eval_morphism(f, c.source)
            want_tgt = eval_morphism(f, c.target)
            if dg.boundary(img, dg.SRC, f.target) != want_src or (
                dg.boundary(img, dg.TGT, f.target) != want_tgt
            ):
                return MorphismReport(BOUNDARY_INCOMPAT, cell=c.name)
    for r in f.source.relations:
        cert = f.certificates.get(r.name)
        if cert is None:
            return MorphismReport(CERTIFICATE_FAILED, relation=r.name, detail="no certificate")
        bundle = rw.ProofBundle(
            name=f"certificate:{r.name}",
            context=f.target,
            lhs=eval_morphism(f, r.lhs),
            rhs=eval_morphism(f, r.rhs),
            derivation=cert,
        )
        rep = rw.check_derivation(bundle)
        if not rep.ok:
            return MorphismReport(
                CERTIFICATE_FAILED, relation=r.name, step=rep.step, detail=rep.detail
            )
    return MORPHISM_OK


# -- composition ---------------------------------------------------------------


def shift_step(step: rw.RewriteStep, start: int, offsets: tuple[int, ...]) -> rw.RewriteStep:
    """Re-anchor a step so it acts inside a larger host at the given embedding."""
    if isinstance(step, rw.Apply):
        at = rw.Embedding(
            step.at.start + start,
            tuple(o + p for o, p in zip(step.at.offsets, offsets)),
        )
        return rw.Apply(step.relation, step.direction, at)
    if isinstance(step, rw.Transpose):
        return rw.Transpose(step.index + start)
    if isinstance(step, rw.InterchangerInsert):
        h = step.pair[0] + (offsets[0] if offsets else 0)
        return rw.InterchangerInsert(step.at + start, (h, h + 1))
    if isinstance(step, rw.InterchangerRemove):
        return rw.InterchangerRemove(step.at + start)
    raise FunctorError(f"unknown step {step!r}")


def pushforward_derivation(g: PresentationMorphism, deriv: rw.Derivation) -> rw.Derivation:
    """Map a derivation in g.source to one in g.target.

    Relation applications are replaced by the (possibly reversed) relation
    certificates of g, re-anchored at the image embedding; transposes of
    atoms with multi-atom images expand into block transpositions.
    """
    d = deriv.start
    out: list[rw.RewriteStep] = []
    for step in deriv.steps:
        out.extend(_push_step(g, d, step))
        d = rw.apply_step(d, step, deriv.context)
    return rw.Derivation(g.target, eval_morphism(g, deriv.start), tuple(out))


def _image_start(g: PresentationMorphism, d: Diagram, index: int) -> int:
    return sum(len(image_atoms(g, a)) for a in d.atoms[:index])


def _push_step(g: PresentationMorphism, d: Diagram, step: rw.RewriteStep):
    if isinstance(step, rw.Apply):
        cert = g.certificates.get(step.relation)
        if cert is None:
            raise Mismatch(f"no certificate for relation {step.relation!r}")
        chain = cert if step.direction == rw.FORWARD else rw.reverse_derivation(cert)
        start = _image_start(g, d, step.at.start)
        return [shift_step(s, start, step.at.offsets) for s in chain.steps]
    if isinstance(step, rw.Transpose):
        i = step.index
        m = len(image_atoms(g, d.atoms[i]))
        n = len(image_atoms(g, d.atoms[i + 1]))
        s = _image_start(g, d, i)
        steps = []
        # walk each atom of the second block left across the first block
        for j in range(n):
            for t in range(m):
                steps.append(rw.Transpose(s + m + j - 1 - t))
        return steps
    if isinstance(step, rw.InterchangerInsert):
        return [rw.InterchangerInsert(_image_start(g, d, step.at), step.pair)]
    if isinstance(step, rw.InterchangerRemove):
        return [rw.InterchangerRemove(_image_start(g, d, step.at))]
    raise FunctorError(f"unknown step {step!r}")


def compose_morphisms(
    f: PresentationMorphism, g: PresentationMorphism
) -> PresentationMorphism:
    """Pushforward composition; certificates of f are mapped through g."""
    if f.target != g.source:
        raise Mismatch("middle presentations differ")
    assignment = {name: eval_morphism(g, img) for name, img in f.assignment.items()}
    certs = {}
    for r in f.source.relations:
        cert = f.certificates.get(r.name)
        if cert is None:
            raise Mismatch(f"no certificate for relation {r.name!r}")
        certs[r.name] = pushforward_derivation(g, cert)
    return PresentationMorphism(f.source, g.target, assignment, certs)
