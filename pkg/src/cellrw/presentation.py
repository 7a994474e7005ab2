"""Computads: named generator cells with diagram boundaries plus relations.

A presentation of top dimension n holds cells of dimensions 0..n and
relations (unoriented equalities of n-diagrams, the would-be (n+1)-cells).
Presentations are immutable values; every operation returns a fresh one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import diagram as dg
from .diagram import Diagram, Verdict, VERDICT_OK

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

MAX_N = 4


class PresentationError(Exception):
    pass


class DimensionOverflow(PresentationError):
    pass


class DuplicateName(PresentationError):
    pass


class InvalidBoundary(PresentationError):
    def __init__(self, name: str, verdict: Verdict):
        super().__init__(f"boundary of {name!r} invalid: {verdict}")
        self.verdict = verdict


class GlobularityFailure(PresentationError):
    pass


class BoundaryMismatch(PresentationError):
    pass


class DimensionMismatch(PresentationError):
    pass


@dataclass(frozen=True)
class GeneratorCell:
    name: str
    dim: int
    source: Optional[Diagram] = None
    target: Optional[Diagram] = None


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: Diagram
    rhs: Diagram

    @property
    def dim(self) -> int:
        return self.lhs.dim


@dataclass(frozen=True)
class Presentation:
    """A computad: cells per dimension 0..n and top-dimensional relations."""

    n: int
    cells: tuple[GeneratorCell, ...] = ()
    relations: tuple[Relation, ...] = ()
    _index: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        idx = {c.name: c for c in self.cells}
        object.__setattr__(self, "_index", idx)
        # per-instance memos used by diagram.slices / rewrite.all_occurrences
        object.__setattr__(self, "_slice_cache", {})
        object.__setattr__(self, "_occ_cache", {})

    def __hash__(self) -> int:
        return hash((self.n, self.cells, self.relations))

    # Signature protocol
    def has_cell(self, name: str) -> bool:
        return name in self._index

    def cell(self, name: str) -> GeneratorCell:
        return self._index[name]

    def cell_dim(self, name: str) -> int:
        return self._index[name].dim

    def cell_source(self, name: str) -> Diagram:
        return self._index[name].source

    def cell_target(self, name: str) -> Diagram:
        return self._index[name].target

    def cells_of_dim(self, k: int) -> tuple[GeneratorCell, ...]:
        return tuple(c for c in self.cells if c.dim == k)

    def cell_counts(self) -> dict[int, int]:
        counts = {k: 0 for k in range(self.n + 1)}
        for c in self.cells:
            counts[c.dim] = counts.get(c.dim, 0) + 1
        return counts

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)

    def has_relation(self, name: str) -> bool:
        return any(r.name == name for r in self.relations)


def new_presentation(n: int) -> Presentation:
    if not 1 <= n <= MAX_N:
        raise DimensionOverflow(f"presentation dimension {n} out of range 1..{MAX_N}")
    return Presentation(n=n)


def add_generator(
    p: Presentation, dim: int, name: str,
    src: Optional[Diagram] = None, tgt: Optional[Diagram] = None,
) -> Presentation:
    """Append a generator cell; boundaries must validate over p."""
    if not NAME_RE.match(name or ""):
        raise PresentationError(f"bad cell name {name!r}")
    if p.has_cell(name) or p.has_relation(name):
        raise DuplicateName(name)
    if not 0 <= dim <= p.n:
        raise DimensionOverflow(f"cell dimension {dim} out of range 0..{p.n}")
    if dim == 0:
        if src is not None or tgt is not None:
            raise InvalidBoundary(name, Verdict(dg.SLICE_MISMATCH, detail="0-cell with boundary"))
        cell = GeneratorCell(name, 0)
    else:
        if src is None or tgt is None:
            raise InvalidBoundary(name, Verdict(dg.SLICE_MISMATCH, detail="missing boundary"))
        if src.dim != dim - 1 or tgt.dim != dim - 1:
            raise DimensionMismatch(f"boundaries of {name!r} must have dimension {dim - 1}")
        for side in (src, tgt):
            v = dg.validate(side, p)
            if not v.ok:
                raise InvalidBoundary(name, v)
        if dim >= 2:
            if dg.boundary(src, dg.SRC, p) != dg.boundary(tgt, dg.SRC, p) or dg.boundary(
                src, dg.TGT, p
            ) != dg.boundary(tgt, dg.TGT, p):
                raise GlobularityFailure(name)
        cell = GeneratorCell(name, dim, src, tgt)
    return Presentation(n=p.n, cells=p.cells + (cell,), relations=p.relations)


def add_relation(p: Presentation, name: str, lhs: Diagram, rhs: Diagram) -> Presentation:
    """Append an unoriented equality of n-diagrams."""
    if not NAME_RE.match(name or ""):
        raise PresentationError(f"bad relation name {name!r}")
    if p.has_cell(name) or p.has_relation(name):
        raise DuplicateName(name)
    if lhs.dim != p.n or rhs.dim != p.n:
        raise DimensionMismatch(f"relation {name!r} sides must have dimension {p.n}")
    for side in (lhs, rhs):
        v = dg.validate(side, p)
        if not v.ok:
            raise InvalidBoundary(name, v)
    if dg.boundary(lhs, dg.SRC, p) != dg.boundary(rhs, dg.SRC, p) or dg.boundary(
        lhs, dg.TGT, p
    ) != dg.boundary(rhs, dg.TGT, p):
        raise BoundaryMismatch(name)
    return Presentation(n=p.n, cells=p.cells, relations=p.relations + (Relation(name, lhs, rhs),))


def theta(k: int) -> Presentation:
    """The free k-globe: one k-cell, two cells in each lower dimension."""
    if not 0 <= k <= MAX_N:
        raise DimensionOverflow(f"theta dimension {k} out of range 0..{MAX_N}")
    p = Presentation(n=max(k, 1))
    if k == 0:
        return add_generator(p, 0, "c0")
    lo_s, lo_t = "s0", "t0"
    p = add_generator(p, 0, lo_s)
    p = add_generator(p, 0, lo_t)
    src, tgt = dg.point(lo_s), dg.point(lo_t)
    for j in range(1, k):
        sj, tj = f"s{j}", f"t{j}"
        p = add_generator(p, j, sj, src, tgt)
        p = add_generator(p, j, tj, src, tgt)
        src = _cell_diagram(p, sj)
        tgt = _cell_diagram(p, tj)
    return add_generator(p, k, f"c{k}", src, tgt)


def _cell_diagram(p: Presentation, name: str) -> Diagram:
    """The j-diagram consisting of a single atom of the named cell."""
    c = p.cell(name)
    if c.dim == 0:
        return dg.point(name)
    return Diagram(dim=c.dim, source=c.source, atoms=(dg.Atom(name, (0,) * (c.dim - 1)),))


def skeleton(p: Presentation, k: int) -> Presentation:
    """Truncate to cells of dimension <= k; relations survive only at k = n."""
    if not 0 <= k <= p.n:
        raise DimensionOverflow(f"skeleton dimension {k} out of range 0..{p.n}")
    if k == p.n:
        return p
    return Presentation(
        n=max(k, 1),
        cells=tuple(c for c in p.cells if c.dim <= k),
        relations=(),
    )


def extend_with_hypotheses(
    p: Presentation,
    new_cells: Iterable[GeneratorCell] = (),
    new_relations: Iterable[Relation] = (),
) -> Presentation:
    """Adjoin fresh boxes and assumed relations (for hypothesis contexts)."""
    out = p
    for c in new_cells:
        out = add_generator(out, c.dim, c.name, c.source, c.target)
    for r in new_relations:
        out = add_relation(out, r.name, r.lhs, r.rhs)
    return out


def validate_presentation(p: Presentation) -> Verdict:
    """Total check: rebuild cell by cell and report the first failure."""
    try:
        if not 1 <= p.n <= MAX_N:
            return Verdict(dg.SLICE_MISMATCH, detail=f"n={p.n} out of range")
        fresh = Presentation(n=p.n)
        # dimension-sorted rebuild: boundaries only ever reference lower cells
        for c in sorted(p.cells, key=lambda c: c.dim):
            fresh = add_generator(fresh, c.dim, c.name, c.source, c.target)
        for r in p.relations:
            fresh = add_relation(fresh, r.name, r.lhs, r.rhs)
        return VERDICT_OK
    except DuplicateName as e:
        return Verdict(dg.SLICE_MISMATCH, detail=f"duplicate name {e}")
    except InvalidBoundary as e:
        return e.verdict
    except GlobularityFailure as e:
        return Verdict(dg.GLOBULARITY_FAILURE, detail=str(e))
    except (BoundaryMismatch, DimensionMismatch, DimensionOverflow, PresentationError) as e:
        return Verdict(dg.SLICE_MISMATCH, detail=str(e))


def cell_diagram(p: Presentation, name: str) -> Diagram:
    """Public helper: the one-atom diagram of a named cell."""
    return _cell_diagram(p, name)
