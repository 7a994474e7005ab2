"""Authoring helpers: searches used to discover the shipped proof chains.

Nothing in here ships as part of the kernel; found chains are frozen into
cellrw.adjlib as literal data and replayed by check_derivation.
"""

from __future__ import annotations

import sys
from collections import deque
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cellrw import diagram as dg
from cellrw import rewrite as rw
from cellrw.diagram import Atom, Diagram, SWAP
from cellrw.presentation import Presentation


def pretty(d: Diagram) -> str:
    if d.dim == 0:
        return d.base
    inner = ", ".join(f"{a.gen}@{list(a.pos)}" for a in d.atoms)
    return f"[{inner}]"


def pretty_deep(d: Diagram, indent: str = "") -> str:
    lines = [f"{indent}dim{d.dim} {pretty(d)}"]
    if d.dim > 0:
        lines.append(pretty_deep(d.source, indent + "  "))
    return "\n".join(lines)


def derivation_moves(d: Diagram, p: Presentation, structural=True, relations=None):
    """All single steps from d: relation applications, then structural moves."""
    for rel in p.relations:
        if relations is not None and rel.name not in relations:
            continue
        for direction, pat in ((rw.FORWARD, rel.lhs), (rw.REVERSE, rel.rhs)):
            for emb in rw.find_matches(pat, d, p):
                step = rw.Apply(rel.name, direction, emb)
                try:
                    yield step, rw.apply_step(d, step, p)
                except rw.RewriteError:
                    pass
    if structural:
        yield from rw.structural_successors(d, p)


def weight(d: Diagram) -> int:
    return len(d.atoms)


def bidi_search(
    p: Presentation,
    start: Diagram,
    goal: Diagram,
    max_depth: int = 12,
    max_atoms: int = 10,
    structural: bool = True,
    relations=None,
    inserts: bool = True,
    verbose: bool = False,
    max_states: int = 400_000,
):
    """Bidirectional BFS over derivation steps; returns a step list or None.

    Works because every step kind is invertible: the backward frontier is
    expanded with the same move set and the meeting point's goal-side path
    is reversed via rw.inverse_step.
    """

    def moves(d):
        for step, nxt in derivation_moves(d, p, structural=structural, relations=relations):
            if not inserts and isinstance(step, rw.InterchangerInsert):
                continue
            if len(nxt.atoms) <= max_atoms:
                yield step, nxt

    if start == goal:
        return []
    parents_f = {start: None}
    parents_b = {goal: None}
    frontier_f = deque([start])
    frontier_b = deque([goal])
    depth_f = {start: 0}
    depth_b = {goal: 0}
    states = 0

    def reconstruct(meet):
        fwd = []
        node = meet
        while parents_f[node] is not None:
            prev, step = parents_f[node]
            fwd.append(step)
            node = prev
        fwd.reverse()
        # goal-side: path of steps leading from goal to meet; invert them
        back = []
        node = meet
        while parents_b[node] is not None:
            prev, step = parents_b[node]
            # step maps prev -> node; we need node -> prev
            back.append(rw.inverse_step(step, prev, p))
            node = prev
        # back currently lists inverses from meet back to goal in order
        return fwd + back

    while frontier_f or frontier_b:
        # expand the smaller frontier
        if frontier_b and (not frontier_f or len(frontier_b) <= len(frontier_f)):
            frontier, parents, other, dd = frontier_b, parents_b, parents_f, depth_b
            side = "b"
        else:
            frontier, parents, other, dd = frontier_f, parents_f, parents_b, depth_f
            side = "f"
        for _ in range(len(frontier)):
            d = frontier.popleft()
            if dd[d] >= max_depth:
                continue
            for step, nxt in moves(d):
                if nxt in parents:
                    continue
                parents[nxt] = (d, step)
                dd[nxt] = dd[d] + 1
                states += 1
                if states > max_states:
                    if verbose:
                        print("state budget exhausted", file=sys.stderr)
                    return None
                if nxt in other:
                    if side == "f":
                        return reconstruct(nxt)
                    # meeting while expanding backward: rebuild both halves
                    return reconstruct_meet(nxt, parents_f, parents_b, p)
                frontier.append(nxt)
        if verbose:
            print(
                f"side={side} f={len(parents_f)} b={len(parents_b)}",
                file=sys.stderr,
            )
    return None


def reconstruct_meet(meet, parents_f, parents_b, p):
    fwd = []
    node = meet
    while parents_f[node] is not None:
        prev, step = parents_f[node]
        fwd.append(step)
        node = prev
    fwd.reverse()
    back = []
    node = meet
    while parents_b[node] is not None:
        prev, step = parents_b[node]
        back.append(rw.inverse_step(step, prev, p))
        node = prev
    return fwd + back


def astar_bidi(
    p: Presentation,
    start: Diagram,
    goal: Diagram,
    max_atoms: int = 9,
    atom_weight: int = 3,
    structural: bool = True,
    relations=None,
    inserts: bool = True,
    max_states: int = 2_000_000,
    report_every: int = 20000,
    verbose: bool = False,
):
    """Bidirectional best-first search preferring small diagrams.

    Priority = depth + atom_weight * atom count.  Both frontiers use the
    full forward move set (all steps are invertible); the goal-side path
    is inverted during reconstruction.
    """
    import heapq

    def moves(d):
        for step, nxt in derivation_moves(d, p, structural=structural, relations=relations):
            if not inserts and isinstance(step, rw.InterchangerInsert):
                continue
            if len(nxt.atoms) <= max_atoms:
                yield step, nxt

    if start == goal:
        return []
    parents = ({start: None}, {goal: None})
    depth = ({start: 0}, {goal: 0})
    heaps = (
        [(atom_weight * len(start.atoms), 0, start)],
        [(atom_weight * len(goal.atoms), 0, goal)],
    )
    counter = 0
    states = 0

    def rebuild(meet):
        fwd = []
        node = meet
        while parents[0][node] is not None:
            prev, step = parents[0][node]
            fwd.append(step)
            node = prev
        fwd.reverse()
        back = []
        node = meet
        while parents[1][node] is not None:
            prev, step = parents[1][node]
            back.append(rw.inverse_step(step, prev, p))
            node = prev
        return fwd + back

    while heaps[0] or heaps[1]:
        side = 0 if (heaps[0] and (not heaps[1] or len(heaps[0]) <= len(heaps[1]))) else 1
        if not heaps[side]:
            side = 1 - side
        _, _, d = heapq.heappop(heaps[side])
        for step, nxt in moves(d):
            if nxt in parents[side]:
                continue
            parents[side][nxt] = (d, step)
            depth[side][nxt] = depth[side][d] + 1
            states += 1
            if verbose and states % report_every == 0:
                print(f"states={states} f={len(parents[0])} b={len(parents[1])}", file=sys.stderr)
            if nxt in parents[1 - side]:
                return rebuild(nxt)
            counter += 1
            heapq.heappush(
                heaps[side],
                (depth[side][nxt] + atom_weight * len(nxt.atoms), counter, nxt),
            )
            if states > max_states:
                return None
    return None


def check_steps(p: Presentation, start: Diagram, steps, goal: Diagram) -> bool:
    d = start
    for s in steps:
        d = rw.apply_step(d, s, p)
    return d == goal


def generator_moves(d: Diagram, p: Presentation, cells=None, transposes=True):
    """Single (dim+1)-cell applications and transposes on a diagram d.

    Yields (atom, result): the atom is what a (dim+1)-diagram would record.
    """
    for cell in p.cells:
        if cell.dim != d.dim + 1:
            continue
        if cells is not None and cell.name not in cells:
            continue
        for pos in rw.occurrence_positions(cell.source, d, p):
            try:
                yield Atom(cell.name, pos), dg.rewrite_slice(d, Atom(cell.name, pos), p)
            except dg.DiagramError:
                pass
    if transposes:
        for i in range(len(d.atoms) - 1):
            try:
                yield Atom(SWAP, (i,)), dg.transpose_atoms(d, i, p)
            except dg.DiagramError:
                pass


def bidi_composite_search(
    p: Presentation,
    start: Diagram,
    goal: Diagram,
    max_depth: int = 12,
    max_atoms: int = 10,
    cells=None,
    verbose: bool = False,
    max_states: int = 400_000,
):
    """Find an atom path start -> goal using generator applications.

    Backward expansion inverts generators via the inverse-pair naming
    convention (X <-> X_inv) and swaps via involution, so only invertible
    cells may be enabled.
    """

    def inv_name(n):
        return n[:-4] if n.endswith("_inv") else n + "_inv"

    def fwd_moves(d):
        for a, nxt in generator_moves(d, p, cells=cells):
            if len(nxt.atoms) <= max_atoms:
                yield a, nxt

    if start == goal:
        return []
    parents_f = {start: None}
    parents_b = {goal: None}
    frontier_f = deque([start])
    frontier_b = deque([goal])
    depth_f = {start: 0}
    depth_b = {goal: 0}
    states = 0

    def rebuild(meet):
        fwd = []
        node = meet
        while parents_f[node] is not None:
            prev, a = parents_f[node]
            fwd.append(a)
            node = prev
        fwd.reverse()
        back = []
        node = meet
        while parents_b[node] is not None:
            prev, a = parents_b[node]
            if a.gen == SWAP:
                back.append(a)
            else:
                back.append(Atom(inv_name(a.gen), a.pos))
            node = prev
        return fwd + back

    while frontier_f or frontier_b:
        if frontier_b and (not frontier_f or len(frontier_b) <= len(frontier_f)):
            frontier, parents, other, dd = frontier_b, parents_b, parents_f, depth_b
        else:
            frontier, parents, other, dd = frontier_f, parents_f, parents_b, depth_f
        for _ in range(len(frontier)):
            d = frontier.popleft()
            if dd[d] >= max_depth:
                continue
            for a, nxt in fwd_moves(d):
                if nxt in parents:
                    continue
                parents[nxt] = (d, a)
                dd[nxt] = dd[d] + 1
                states += 1
                if states > max_states:
                    if verbose:
                        print("state budget exhausted", file=sys.stderr)
                    return None
                if nxt in other:
                    return rebuild(nxt)
                frontier.append(nxt)
        if verbose:
            print(f"f={len(parents_f)} b={len(parents_b)}", file=sys.stderr)
    return None


def check_atom_path(p: Presentation, start: Diagram, atoms, goal: Diagram) -> bool:
    d = start
    for a in atoms:
        d = dg.rewrite_slice(d, a, p)
    return d == goal
