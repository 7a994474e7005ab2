"""Term model for string diagrams in the free sesquicategory on a computad.

A k-diagram is a (k-1)-diagram (its source) plus an ordered list of atoms.
Each atom applies a k-cell of the ambient presentation to the current
(k-1)-dimensional slice; the slice after the last atom is the target.
Atom positions are height vectors: one natural number per dimension from
k-1 down to 1, locating where the cell's source pattern sits inside the
slice.  Everything is immutable; all operations return fresh values.

Orientation conventions: source at the bottom, composition bottom-to-top,
whiskering left-to-right.  A 1-diagram [a, b] is the path "a then b".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Protocol

MAX_DIM = 5

# Built-in interchanger tag.  A swap atom in a k-diagram transposes two
# adjacent independent atoms of the current (k-1)-slice; its position is
# the single index of the lower pair.  Available in every presentation.
SWAP = "!swap"

SRC = "src"
TGT = "tgt"


class DiagramError(Exception):
    """Base class for diagram construction/evaluation errors."""


class DimensionOverflow(DiagramError):
    pass


class NoBoundary(DiagramError):
    pass


class DimensionMismatch(DiagramError):
    pass


class ComposeMismatch(DiagramError):
    def __init__(self, level: int, expected: "Diagram", found: "Diagram"):
        super().__init__(f"boundary mismatch at level {level}")
        self.level = level
        self.expected = expected
        self.found = found


class BadAtom(DiagramError):
    """An atom does not apply to its slice (bad cell, position or overlap)."""


class NotIndependent(DiagramError):
    def __init__(self, index: int):
        super().__init__(f"atoms {index}, {index + 1} have overlapping supports")
        self.index = index


class Signature(Protocol):
    """Cell lookup interface; implemented by Presentation."""

    def has_cell(self, name: str) -> bool: ...

    def cell_dim(self, name: str) -> int: ...

    def cell_source(self, name: str) -> "Diagram": ...

    def cell_target(self, name: str) -> "Diagram": ...


@dataclass(frozen=True)
class Atom:
    """One generator occurrence: cell name plus height vector.

    Generator atoms in a k-diagram carry k-1 heights; swap atoms carry a
    single height (the index of the transposed pair in the slice below).
    """

    gen: str
    pos: tuple[int, ...]

    def shifted(self, offsets: tuple[int, ...]) -> "Atom":
        if self.gen == SWAP:
            return Atom(SWAP, (self.pos[0] + offsets[0],))
        return Atom(self.gen, tuple(p + o for p, o in zip(self.pos, offsets)))


@dataclass(frozen=True)
class Diagram:
    """A k-dimensional string-diagram term.

    dim 0: a bare reference to a 0-cell, held in `base`.
    dim >= 1: `source` is the (k-1)-diagram below, `atoms` the events.
    """

    dim: int
    source: Optional["Diagram"] = None
    atoms: tuple[Atom, ...] = ()
    base: Optional[str] = None
    _hash: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        h = hash((self.dim, self.base, self.atoms, self.source))
        object.__setattr__(self, "_hash", h)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Diagram):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.dim == other.dim
            and self.base == other.base
            and self.atoms == other.atoms
            and self.source == other.source
        )


def point(name: str) -> Diagram:
    """The 0-diagram referencing a 0-cell."""
    return Diagram(dim=0, base=name)


def identity_diagram(d: Diagram) -> Diagram:
    """The identity (k+1)-diagram on d: source d, no atoms."""
    if d.dim + 1 > MAX_DIM:
        raise DimensionOverflow(f"identity would have dimension {d.dim + 1} > {MAX_DIM}")
    return Diagram(dim=d.dim + 1, source=d)


def _in_width(a: Atom, sig: Signature) -> int:
    if a.gen == SWAP:
        return 2
    return len(sig.cell_source(a.gen).atoms)


def _out_width(a: Atom, sig: Signature) -> int:
    if a.gen == SWAP:
        return 2
    return len(sig.cell_target(a.gen).atoms)


def transpose_atoms(d: Diagram, i: int, sig: Signature) -> Diagram:
    """Swap adjacent independent atoms i, i+1, adjusting leading heights.

    Two atoms are independent when the first one's output block and the
    second one's input block are disjoint intervals of the intermediate
    slice's atom list.  When both orders are possible (two zero-width
    events at the same point) the second atom is treated as lying left.
    """
    if d.dim < 1 or i < 0 or i + 1 >= len(d.atoms):
        raise BadAtom(f"no adjacent pair at index {i}")
    a, b = d.atoms[i], d.atoms[i + 1]
    if d.dim == 1:
        raise NotIndependent(i)
    p0, q0 = a.pos[0], b.pos[0]
    out_a = _out_width(a, sig)
    in_a = _in_width(a, sig)
    out_b = _out_width(b, sig)
    in_b = _in_width(b, sig)
    atoms = list(d.atoms)
    if q0 + in_b <= p0:
        # A pure deletion ending exactly at a pure insertion is refused:
        # its swap lands on the ambiguous [delete@s, insert@s] form whose
        # two readings would make the transposition non-involutive.
        if q0 + in_b == p0 and in_a == 0 and out_b == 0:
            raise NotIndependent(i)
        # b lies left of a's output: b keeps its height, a shifts by b's growth
        atoms[i] = b
        atoms[i + 1] = _shift_lead(a, out_b - in_b)
    elif q0 >= p0 + out_a:
        atoms[i] = _shift_lead(b, in_a - out_a)
        atoms[i + 1] = a
    else:
        raise NotIndependent(i)
    return Diagram(dim=d.dim, source=d.source, atoms=tuple(atoms))


def _shift_lead(a: Atom, delta: int) -> Atom:
    return Atom(a.gen, (a.pos[0] + delta,) + a.pos[1:])


def occurs(pattern: Diagram, host: Diagram, pos: tuple[int, ...], sig: Signature) -> Optional[str]:
    """Check that pattern occurs in host at the given position vector.

    pos has length == host.dim: leading component is the block start in
    host.atoms, the rest locate pattern.source inside the slice there.
    Returns None on success, else a short reason ("height" for an
    out-of-range block, "mismatch" otherwise).
    """
    if pattern.dim != host.dim:
        return "mismatch"
    if host.dim == 0:
        return None if pattern.base == host.base else "mismatch"
    if len(pos) != host.dim:
        return "mismatch"
    b, off = pos[0], pos[1:]
    n = len(pattern.atoms)
    if b < 0 or b + n > len(host.atoms) or any(o < 0 for o in pos):
        return "height"
    for i, pa in enumerate(pattern.atoms):
        if host.atoms[b + i] != pa.shifted(off):
            return "mismatch"
    return occurs(pattern.source, slice_at(host, b, sig), off, sig)


def rewrite_slice(s: Diagram, a: Atom, sig: Signature) -> Diagram:
    """Apply one atom (a (dim+1)-cell occurrence or swap) to slice s."""
    if a.gen == SWAP:
        if len(a.pos) != 1:
            raise BadAtom("swap atom takes a single height")
        return transpose_atoms(s, a.pos[0], sig)
    if not sig.has_cell(a.gen):
        raise BadAtom(f"unknown cell {a.gen!r}")
    if sig.cell_dim(a.gen) != s.dim + 1:
        raise BadAtom(f"cell {a.gen!r} has dimension {sig.cell_dim(a.gen)}, expected {s.dim + 1}")
    if len(a.pos) != s.dim:
        raise BadAtom(f"atom {a.gen!r} has a height vector of length {len(a.pos)}, expected {s.dim}")
    pat = sig.cell_source(a.gen)
    reason = occurs(pat, s, a.pos, sig)
    if reason is not None:
        raise BadAtom(f"source of {a.gen!r} does not occur at {a.pos} ({reason})")
    if s.dim == 0:
        return sig.cell_target(a.gen)
    b, off = a.pos[0], a.pos[1:]
    repl = tuple(x.shifted(off) for x in sig.cell_target(a.gen).atoms)
    atoms = s.atoms[:b] + repl + s.atoms[b + len(pat.atoms):]
    return Diagram(dim=s.dim, source=s.source, atoms=atoms)


def slices(d: Diagram, sig: Signature) -> list[Diagram]:
    """The evaluation trace [source, ..., target]; length = atom count + 1."""
    if d.dim < 1:
        raise NoBoundary("0-diagrams have no slices")
    cache = getattr(sig, "_slice_cache", None)
    if cache is not None:
        hit = cache.get(d)
        if hit is not None:
            return list(hit)
    out = [d.source]
    for a in d.atoms:
        out.append(rewrite_slice(out[-1], a, sig))
    if cache is not None:
        cache[d] = tuple(out)
    return out


def slice_at(d: Diagram, i: int, sig: Signature) -> Diagram:
    return slices(d, sig)[i]


def boundary(d: Diagram, side: str, sig: Signature) -> Diagram:
    """Source (stored) or target (source rewritten by all atoms)."""
    if d.dim < 1:
        raise NoBoundary("0-diagrams have no boundary")
    if side == SRC:
        return d.source
    if side == TGT:
        return slices(d, sig)[-1]
    raise ValueError(f"side must be {SRC!r} or {TGT!r}")


def boundary_at(d: Diagram, dim: int, side: str, sig: Signature) -> Diagram:
    """Iterated boundary of d down to the given dimension."""
    while d.dim > dim:
        d = boundary(d, side, sig)
    return d


def compose(d1: Diagram, d2: Diagram, p: int, sig: Signature) -> Diagram:
    """Compose along the shared p-dimensional boundary.

    For p = k-1 this is atom-list concatenation over d1's source.  For
    lower p, d2's atoms are shifted in every height component above p by
    the atom count of d1's iterated target boundary at that dimension, so
    that all of d1 happens before/below all of d2 (the sesquicategorical
    whisker order).
    """
    k = d1.dim
    if d2.dim != k:
        raise DimensionMismatch(f"compose of dimensions {k} and {d2.dim}")
    if not 0 <= p < k:
        raise DimensionMismatch(f"compose level {p} out of range for dimension {k}")
    left = boundary_at(d1, p, TGT, sig)
    right = boundary_at(d2, p, SRC, sig)
    if left != right:
        raise ComposeMismatch(p, left, right)
    if p == k - 1:
        return Diagram(dim=k, source=d1.source, atoms=d1.atoms + d2.atoms)
    # shifts[j] for dimension j in p+1..k-1: atom count of d1's target
    # boundary at dimension j
    shifts = {}
    bnd = d1
    for j in range(k - 1, p, -1):
        bnd = boundary(bnd, TGT, sig)
        shifts[j] = len(bnd.atoms)
    src = compose(d1.source, d2.source, p, sig)
    moved = tuple(_shift_for_compose(a, k, p, shifts) for a in d2.atoms)
    return Diagram(dim=k, source=src, atoms=d1.atoms + moved)


def _shift_for_compose(a: Atom, k: int, p: int, shifts: dict[int, int]) -> Atom:
    if a.gen == SWAP:
        return Atom(SWAP, (a.pos[0] + shifts[k - 1],))
    # pos component at index m is the height for dimension k-1-m
    new = tuple(
        h + shifts[k - 1 - m] if (k - 1 - m) > p else h
        for m, h in enumerate(a.pos)
    )
    return Atom(a.gen, new)


# -- validation -------------------------------------------------------------

OK = "ok"
UNKNOWN_CELL = "unknown_cell"
SLICE_MISMATCH = "slice_mismatch"
GLOBULARITY_FAILURE = "globularity_failure"
HEIGHT_OUT_OF_RANGE = "height_out_of_range"


@dataclass(frozen=True)
class Verdict:
    code: str
    detail: str = ""
    atom: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.code == OK

    def __str__(self) -> str:
        loc = f" at atom {self.atom}" if self.atom is not None else ""
        msg = f": {self.detail}" if self.detail else ""
        return f"{self.code}{loc}{msg}"


VERDICT_OK = Verdict(OK)


def validate(d: Diagram, sig: Signature) -> Verdict:
    """Total well-typedness check of d against the signature.

    Never raises; reports the first failing atom index and invariant.
    """
    try:
        return _validate(d, sig)
    except DiagramError as e:  # defensive: validation itself must not throw
        return Verdict(SLICE_MISMATCH, detail=str(e))


def _validate(d: Diagram, sig: Signature) -> Verdict:
    if not 0 <= d.dim <= MAX_DIM:
        return Verdict(SLICE_MISMATCH, detail=f"dimension {d.dim} out of range")
    if d.dim == 0:
        if d.source is not None or d.atoms:
            return Verdict(SLICE_MISMATCH, detail="0-diagram with source or atoms")
        if d.base is None or not sig.has_cell(d.base) or sig.cell_dim(d.base) != 0:
            return Verdict(UNKNOWN_CELL, detail=str(d.base))
        return VERDICT_OK
    if d.base is not None or d.source is None:
        return Verdict(SLICE_MISMATCH, detail="positive-dimension diagram needs a bare source")
    if d.source.dim != d.dim - 1:
        return Verdict(SLICE_MISMATCH, detail="source has wrong dimension")
    sub = _validate(d.source, sig)
    if not sub.ok:
        return sub
    s = d.source
    for i, a in enumerate(d.atoms):
        if a.gen == SWAP:
            if len(a.pos) != 1:
                return Verdict(SLICE_MISMATCH, atom=i, detail="swap atom takes a single height")
            if not 0 <= a.pos[0] <= len(s.atoms) - 2:
                return Verdict(HEIGHT_OUT_OF_RANGE, atom=i)
            try:
                s = transpose_atoms(s, a.pos[0], sig)
            except NotIndependent:
                return Verdict(SLICE_MISMATCH, atom=i, detail="swapped atoms not independent")
            continue
        if not sig.has_cell(a.gen) or sig.cell_dim(a.gen) != d.dim:
            return Verdict(UNKNOWN_CELL, atom=i, detail=a.gen)
        if len(a.pos) != d.dim - 1:
            return Verdict(SLICE_MISMATCH, atom=i, detail="height vector has wrong length")
        reason = occurs(sig.cell_source(a.gen), s, a.pos, sig)
        if reason == "height":
            return Verdict(HEIGHT_OUT_OF_RANGE, atom=i)
        if reason is not None:
            return Verdict(SLICE_MISMATCH, atom=i)
        s = rewrite_slice(s, a, sig)
    if d.dim >= 2:
        # final slice s is boundary(d, tgt); compare boundaries syntactically
        if boundary(d.source, SRC, sig) != boundary(s, SRC, sig) or boundary(
            d.source, TGT, sig
        ) != boundary(s, TGT, sig):
            return Verdict(GLOBULARITY_FAILURE)
    return VERDICT_OK
