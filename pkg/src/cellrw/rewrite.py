"""The proof kernel: matching, rewrite steps, derivation replay, search.

A derivation is a boundary-preserving sequence of steps on diagrams of a
fixed dimension: relation applications at explicit embeddings, transposes
of adjacent independent atoms, and insertion/removal of canceling pairs
of built-in interchanger atoms.  check_derivation trusts nothing: it
revalidates the context and every intermediate diagram while replaying.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from . import diagram as dg
from .diagram import Atom, Diagram, SWAP
from .presentation import Presentation, validate_presentation

FORWARD = "fwd"
REVERSE = "rev"


class RewriteError(Exception):
    pass


class DimensionMismatch(RewriteError):
    pass


class BoundaryMismatch(RewriteError):
    pass


class BadMatch(RewriteError):
    def __init__(self, step, reason: str):
        super().__init__(f"{describe_step(step)}: {reason}")
        self.step = step
        self.reason = reason


class NotIndependent(RewriteError):
    def __init__(self, index: int):
        super().__init__(f"atoms {index}, {index + 1} not independent")
        self.index = index


class NotCancelingPair(RewriteError):
    def __init__(self, position: int):
        super().__init__(f"atoms {position}, {position + 1} are not a canceling swap pair")
        self.position = position


@dataclass(frozen=True)
class Embedding:
    """Location of a pattern inside a host of equal dimension.

    start indexes the host atom list; offsets shift every pattern height
    into host coordinates, and simultaneously locate the pattern's source
    inside the host slice at start.
    """

    start: int
    offsets: tuple[int, ...] = ()

    @property
    def pos(self) -> tuple[int, ...]:
        return (self.start,) + self.offsets


@dataclass(frozen=True)
class Apply:
    relation: str
    direction: str  # FORWARD applies lhs -> rhs
    at: Embedding


@dataclass(frozen=True)
class Transpose:
    index: int


@dataclass(frozen=True)
class InterchangerInsert:
    at: int
    pair: tuple[int, int]  # adjacent lower-atom indices (h, h+1)


@dataclass(frozen=True)
class InterchangerRemove:
    at: int


RewriteStep = Union[Apply, Transpose, InterchangerInsert, InterchangerRemove]


def describe_step(step: RewriteStep) -> str:
    if isinstance(step, Apply):
        return f"apply {step.relation} {step.direction} @ {step.at.pos}"
    if isinstance(step, Transpose):
        return f"transpose {step.index}"
    if isinstance(step, InterchangerInsert):
        return f"insert swap pair at {step.at} on {step.pair}"
    return f"remove swap pair at {step.at}"


@dataclass(frozen=True)
class Derivation:
    context: Presentation
    start: Diagram
    steps: tuple[RewriteStep, ...] = ()


@dataclass(frozen=True)
class ProofBundle:
    """A named, replayable claim: lhs rewrites to rhs in the context."""

    name: str
    context: Presentation
    lhs: Diagram
    rhs: Diagram
    derivation: Derivation
    doc: str = ""


# -- matching ----------------------------------------------------------------


def occurrence_positions(pattern: Diagram, host: Diagram, sig) -> Iterator[tuple[int, ...]]:
    """All position vectors at which pattern occurs in host (lex order)."""
    yield from all_occurrences(pattern, host, sig)


def all_occurrences(pattern: Diagram, host: Diagram, sig) -> tuple[tuple[int, ...], ...]:
    cache = getattr(sig, "_occ_cache", None)
    key = (pattern, host)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    out = tuple(_occurrences(pattern, host, sig))
    if cache is not None:
        cache[key] = out
    return out


def _occurrences(pattern: Diagram, host: Diagram, sig) -> Iterator[tuple[int, ...]]:
    if pattern.dim != host.dim:
        return
    if host.dim == 0:
        if pattern.base == host.base:
            yield ()
        return
    n = len(pattern.atoms)
    hs = dg.slices(host, sig)
    anchor = next((i for i, a in enumerate(pattern.atoms) if a.gen != SWAP), None)
    for b in range(len(host.atoms) - n + 1):
        if anchor is not None:
            # a generator atom pins the offsets: subtract and verify
            pa, ha = pattern.atoms[anchor], host.atoms[b + anchor]
            if ha.gen != pa.gen or len(ha.pos) != len(pa.pos):
                continue
            off = tuple(h - q for h, q in zip(ha.pos, pa.pos))
            if any(o < 0 for o in off):
                continue
            if all(host.atoms[b + i] == pattern.atoms[i].shifted(off) for i in range(n)):
                if dg.occurs(pattern.source, hs[b], off, sig) is None:
                    yield (b,) + off
            continue
        for off in all_occurrences(pattern.source, hs[b], sig):
            if all(host.atoms[b + i] == pattern.atoms[i].shifted(off) for i in range(n)):
                yield (b,) + off


def find_matches(pattern: Diagram, host: Diagram, sig) -> list[Embedding]:
    """All embeddings of pattern into host, sorted by (start, offsets)."""
    if pattern.dim != host.dim:
        raise DimensionMismatch(f"pattern dim {pattern.dim} vs host dim {host.dim}")
    if host.dim == 0:
        return [Embedding(0, ())] if pattern == host else []
    return [Embedding(pos[0], pos[1:]) for pos in occurrence_positions(pattern, host, sig)]


# -- step application --------------------------------------------------------


def apply_step(d: Diagram, step: RewriteStep, p: Presentation) -> Diagram:
    """Apply one step; the result has the same boundaries as d."""
    if isinstance(step, Apply):
        rel = None
        for r in p.relations:
            if r.name == step.relation:
                rel = r
                break
        if rel is None:
            raise BadMatch(step, f"unknown relation {step.relation!r}")
        if rel.dim != d.dim:
            raise BadMatch(step, "relation dimension differs from diagram dimension")
        pat, repl = (rel.lhs, rel.rhs) if step.direction == FORWARD else (rel.rhs, rel.lhs)
        reason = dg.occurs(pat, d, step.at.pos, p)
        if reason is not None:
            raise BadMatch(step, f"pattern does not occur ({reason})")
        b, off = step.at.start, step.at.offsets
        atoms = (
            d.atoms[:b]
            + tuple(a.shifted(off) for a in repl.atoms)
            + d.atoms[b + len(pat.atoms):]
        )
        return Diagram(dim=d.dim, source=d.source, atoms=atoms)
    if isinstance(step, Transpose):
        try:
            return dg.transpose_atoms(d, step.index, p)
        except dg.NotIndependent as e:
            raise NotIndependent(e.index) from None
        except dg.DiagramError as e:
            raise BadMatch(step, str(e)) from None
    if isinstance(step, InterchangerInsert):
        h1, h2 = step.pair
        if h2 != h1 + 1:
            raise BadMatch(step, "witness must be adjacent lower-atom indices")
        if not 0 <= step.at <= len(d.atoms):
            raise BadMatch(step, "insertion point out of range")
        s = dg.slice_at(d, step.at, p)
        try:
            dg.transpose_atoms(s, h1, p)
        except dg.DiagramError as e:
            raise BadMatch(step, f"swap not applicable: {e}") from None
        pair = (Atom(SWAP, (h1,)), Atom(SWAP, (h1,)))
        atoms = d.atoms[:step.at] + pair + d.atoms[step.at:]
        return Diagram(dim=d.dim, source=d.source, atoms=atoms)
    if isinstance(step, InterchangerRemove):
        i = step.at
        if not 0 <= i <= len(d.atoms) - 2:
            raise NotCancelingPair(i)
        a, b = d.atoms[i], d.atoms[i + 1]
        if a.gen != SWAP or b.gen != SWAP or a.pos != b.pos:
            raise NotCancelingPair(i)
        s = dg.slice_at(d, i, p)
        try:
            dg.transpose_atoms(s, a.pos[0], p)
        except dg.DiagramError:
            raise NotCancelingPair(i) from None
        atoms = d.atoms[:i] + d.atoms[i + 2:]
        return Diagram(dim=d.dim, source=d.source, atoms=atoms)
    raise RewriteError(f"unknown step {step!r}")


def inverse_step(step: RewriteStep, before: Diagram, p: Presentation) -> RewriteStep:
    """The step undoing `step` when applied after it (before = pre-step diagram)."""
    if isinstance(step, Apply):
        direction = REVERSE if step.direction == FORWARD else FORWARD
        return Apply(step.relation, direction, step.at)
    if isinstance(step, Transpose):
        return step
    if isinstance(step, InterchangerInsert):
        return InterchangerRemove(step.at)
    if isinstance(step, InterchangerRemove):
        a = before.atoms[step.at]
        return InterchangerInsert(step.at, (a.pos[0], a.pos[0] + 1))
    raise RewriteError(f"unknown step {step!r}")


def reverse_derivation(deriv: Derivation) -> Derivation:
    """Replay and invert: a derivation from the end diagram back to start."""
    d = deriv.start
    inverses = []
    for step in deriv.steps:
        inverses.append(inverse_step(step, d, deriv.context))
        d = apply_step(d, step, deriv.context)
    return Derivation(deriv.context, d, tuple(reversed(inverses)))


# -- derivation checking -----------------------------------------------------

CONTEXT_INVALID = "context_invalid"
STEP_FAILED = "step_failed"
FINAL_MISMATCH = "final_mismatch"


@dataclass(frozen=True)
class CheckReport:
    code: str
    detail: str = ""
    step: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.code == dg.OK

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        loc = f" at step {self.step}" if self.step is not None else ""
        return f"{self.code}{loc}: {self.detail}"


CHECK_OK = CheckReport(dg.OK)


def check_derivation(bundle: ProofBundle) -> CheckReport:
    """Replay a bundle from scratch, trusting nothing.

    Ok iff the context validates, lhs and rhs validate, the derivation
    starts at lhs, every step applies with boundaries preserved and valid
    intermediates, and the final diagram equals rhs syntactically.
    """
    p = bundle.context
    v = validate_presentation(p)
    if not v.ok:
        return CheckReport(CONTEXT_INVALID, detail=str(v))
    for label, side in (("lhs", bundle.lhs), ("rhs", bundle.rhs)):
        v = dg.validate(side, p)
        if not v.ok:
            return CheckReport(CONTEXT_INVALID, detail=f"{label} invalid: {v}")
    if bundle.derivation.context != p:
        return CheckReport(CONTEXT_INVALID, detail="derivation context differs from bundle context")
    if bundle.derivation.start != bundle.lhs:
        return CheckReport(STEP_FAILED, step=-1, detail="derivation start differs from lhs")
    d = bundle.lhs
    if d.dim < 1:
        return (
            CHECK_OK
            if not bundle.derivation.steps and d == bundle.rhs
            else CheckReport(FINAL_MISMATCH, detail="0-diagrams admit no steps")
        )
    src0 = dg.boundary(d, dg.SRC, p)
    tgt0 = dg.boundary(d, dg.TGT, p)
    for i, step in enumerate(bundle.derivation.steps):
        try:
            d = apply_step(d, step, p)
        except RewriteError as e:
            return CheckReport(STEP_FAILED, step=i, detail=str(e))
        v = dg.validate(d, p)
        if not v.ok:
            return CheckReport(STEP_FAILED, step=i, detail=f"intermediate invalid: {v}")
        if dg.boundary(d, dg.SRC, p) != src0 or dg.boundary(d, dg.TGT, p) != tgt0:
            return CheckReport(STEP_FAILED, step=i, detail="boundary not preserved")
    if d != bundle.rhs:
        return CheckReport(FINAL_MISMATCH, detail=diff_summary(d, bundle.rhs))
    return CHECK_OK


def diff_summary(got: Diagram, want: Diagram) -> str:
    if got.dim != want.dim:
        return f"dimension {got.dim} != {want.dim}"
    if len(got.atoms) != len(want.atoms):
        return f"atom count {len(got.atoms)} != {len(want.atoms)}"
    for i, (a, b) in enumerate(zip(got.atoms, want.atoms)):
        if a != b:
            return f"first differing atom at index {i}: {a} != {b}"
    return "sources differ"


# -- bounded structural search ------------------------------------------------


def structural_successors(d: Diagram, p: Presentation) -> Iterator[tuple[RewriteStep, Diagram]]:
    """Deterministic order: transposes by index, removals then insertions by position."""
    for i in range(len(d.atoms) - 1):
        step = Transpose(i)
        try:
            yield step, apply_step(d, step, p)
        except RewriteError:
            pass
    for i in range(len(d.atoms) - 1):
        step = InterchangerRemove(i)
        try:
            yield step, apply_step(d, step, p)
        except RewriteError:
            pass
    if d.dim >= 3:
        slices = dg.slices(d, p)
        for at in range(len(d.atoms) + 1):
            for h in range(len(slices[at].atoms) - 1):
                step = InterchangerInsert(at, (h, h + 1))
                try:
                    yield step, apply_step(d, step, p)
                except RewriteError:
                    pass


def auto_structural(
    p: Presentation, d1: Diagram, d2: Diagram, budget: int
) -> Optional[Derivation]:
    """Breadth-first search for a structural route d1 -> d2 of length <= budget.

    Convenience only: any result must still be replayed by check_derivation.
    """
    if d1.dim != d2.dim:
        raise DimensionMismatch(f"dimensions {d1.dim} vs {d2.dim}")
    if d1.dim >= 1:
        for side in (dg.SRC, dg.TGT):
            b1, b2 = dg.boundary(d1, side, p), dg.boundary(d2, side, p)
            if b1 != b2:
                raise BoundaryMismatch(f"{side} boundaries differ")
    if d1 == d2:
        return Derivation(p, d1, ())
    frontier = deque([(d1, ())])
    seen = {d1}
    depth = {d1: 0}
    while frontier:
        d, path = frontier.popleft()
        if depth[d] >= budget:
            continue
        for step, nxt in structural_successors(d, p):
            if nxt in seen:
                continue
            new_path = path + (step,)
            if nxt == d2:
                return Derivation(p, d1, new_path)
            seen.add(nxt)
            depth[nxt] = depth[d] + 1
            frontier.append((nxt, new_path))
    return None
