"""Canonical JSON serialization for diagrams, presentations, bundles, morphisms.

Files are UTF-8 JSON with a fixed key order and format_version 1; store
always emits the canonical form, so store(load(f)) == f byte-for-byte for
every canonical file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from . import rewrite as rw
from .diagram import Atom, Diagram
from .presentation import GeneratorCell, Presentation, Relation

FORMAT_VERSION = 1

KINDS = ("presentation", "diagram", "bundle", "morphism")


class ParseError(Exception):
    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class ValidationError(Exception):
    pass


class IoError(Exception):
    pass


# -- encoding ----------------------------------------------------------------


def diagram_to_obj(d: Diagram) -> dict:
    if d.dim == 0:
        return {"dim": 0, "base": d.base}
    return {
        "dim": d.dim,
        "source": diagram_to_obj(d.source),
        "atoms": [{"gen": a.gen, "pos": list(a.pos)} for a in d.atoms],
    }


def presentation_to_obj(p: Presentation) -> dict:
    cells = []
    for c in sorted(p.cells, key=lambda c: c.dim):
        entry: dict[str, Any] = {"name": c.name, "dim": c.dim}
        if c.dim > 0:
            entry["source"] = diagram_to_obj(c.source)
            entry["target"] = diagram_to_obj(c.target)
        cells.append(entry)
    return {
        "n": p.n,
        "cells": cells,
        "relations": [
            {"name": r.name, "lhs": diagram_to_obj(r.lhs), "rhs": diagram_to_obj(r.rhs)}
            for r in p.relations
        ],
    }


def step_to_obj(s: rw.RewriteStep) -> dict:
    if isinstance(s, rw.Apply):
        return {
            "kind": "apply",
            "rel": s.relation,
            "dir": s.direction,
            "start": s.at.start,
            "offsets": list(s.at.offsets),
        }
    if isinstance(s, rw.Transpose):
        return {"kind": "transpose", "index": s.index}
    if isinstance(s, rw.InterchangerInsert):
        return {"kind": "swap_insert", "at": s.at, "pair": list(s.pair)}
    if isinstance(s, rw.InterchangerRemove):
        return {"kind": "swap_remove", "at": s.at}
    raise ValidationError(f"unknown step {s!r}")


def bundle_to_obj(b: rw.ProofBundle) -> dict:
    return {
        "name": b.name,
        "doc": b.doc,
        "context": presentation_to_obj(b.context),
        "lhs": diagram_to_obj(b.lhs),
        "rhs": diagram_to_obj(b.rhs),
        "steps": [step_to_obj(s) for s in b.derivation.steps],
    }


def morphism_to_obj(m) -> dict:
    # local import: functor depends on rewrite, not the reverse
    return {
        "source": presentation_to_obj(m.source),
        "target": presentation_to_obj(m.target),
        "assignment": {k: diagram_to_obj(v) for k, v in sorted(m.assignment.items())},
        "certificates": {
            k: {
                "start": diagram_to_obj(d.start),
                "steps": [step_to_obj(s) for s in d.steps],
            }
            for k, d in sorted(m.certificates.items())
        },
    }


def wrap(kind: str, payload: dict) -> dict:
    if kind not in KINDS:
        raise ValidationError(f"unknown kind {kind!r}")
    return {"format_version": FORMAT_VERSION, "kind": kind, "payload": payload}


def dumps(obj: Any) -> str:
    """Canonical text: 2-space indent, preserved key order, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- decoding ----------------------------------------------------------------


def diagram_from_obj(o: dict) -> Diagram:
    try:
        dim = o["dim"]
        if dim == 0:
            return Diagram(0, base=o["base"])
        atoms = tuple(Atom(a["gen"], tuple(a["pos"])) for a in o["atoms"])
        return Diagram(dim, source=diagram_from_obj(o["source"]), atoms=atoms)
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad diagram object: {e}") from None


def presentation_from_obj(o: dict) -> Presentation:
    try:
        cells = tuple(
            GeneratorCell(
                c["name"],
                c["dim"],
                diagram_from_obj(c["source"]) if c["dim"] > 0 else None,
                diagram_from_obj(c["target"]) if c["dim"] > 0 else None,
            )
            for c in o["cells"]
        )
        relations = tuple(
            Relation(r["name"], diagram_from_obj(r["lhs"]), diagram_from_obj(r["rhs"]))
            for r in o["relations"]
        )
        return Presentation(n=o["n"], cells=cells, relations=relations)
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad presentation object: {e}") from None


def step_from_obj(o: dict) -> rw.RewriteStep:
    try:
        kind = o["kind"]
        if kind == "apply":
            return rw.Apply(o["rel"], o["dir"], rw.Embedding(o["start"], tuple(o["offsets"])))
        if kind == "transpose":
            return rw.Transpose(o["index"])
        if kind == "swap_insert":
            return rw.InterchangerInsert(o["at"], tuple(o["pair"]))
        if kind == "swap_remove":
            return rw.InterchangerRemove(o["at"])
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad step object: {e}") from None
    raise ParseError(f"unknown step kind {o.get('kind')!r}")


def bundle_from_obj(o: dict) -> rw.ProofBundle:
    try:
        ctx = presentation_from_obj(o["context"])
        lhs = diagram_from_obj(o["lhs"])
        rhs = diagram_from_obj(o["rhs"])
        steps = tuple(step_from_obj(s) for s in o["steps"])
        return rw.ProofBundle(
            name=o["name"],
            context=ctx,
            lhs=lhs,
            rhs=rhs,
            derivation=rw.Derivation(ctx, lhs, steps),
            doc=o["doc"],
        )
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad bundle object: {e}") from None


def morphism_from_obj(o: dict):
    from .functor import PresentationMorphism

    try:
        src = presentation_from_obj(o["source"])
        tgt = presentation_from_obj(o["target"])
        assignment = {k: diagram_from_obj(v) for k, v in o["assignment"].items()}
        certs = {
            k: rw.Derivation(
                tgt,
                diagram_from_obj(c["start"]),
                tuple(step_from_obj(s) for s in c["steps"]),
            )
            for k, c in o["certificates"].items()
        }
        return PresentationMorphism(src, tgt, assignment, certs)
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad morphism object: {e}") from None


def to_obj(value) -> dict:
    from .functor import PresentationMorphism

    if isinstance(value, Presentation):
        return wrap("presentation", presentation_to_obj(value))
    if isinstance(value, Diagram):
        return wrap("diagram", diagram_to_obj(value))
    if isinstance(value, rw.ProofBundle):
        return wrap("bundle", bundle_to_obj(value))
    if isinstance(value, PresentationMorphism):
        return wrap("morphism", morphism_to_obj(value))
    raise ValidationError(f"cannot serialize {type(value).__name__}")


def from_obj(o: dict):
    if not isinstance(o, dict):
        raise ParseError("top level must be an object")
    if o.get("format_version") != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {o.get('format_version')!r}")
    kind = o.get("kind")
    payload = o.get("payload")
    if kind == "presentation":
        return presentation_from_obj(payload)
    if kind == "diagram":
        return diagram_from_obj(payload)
    if kind == "bundle":
        return bundle_from_obj(payload)
    if kind == "morphism":
        return morphism_from_obj(payload)
    raise ParseError(f"unknown kind {kind!r}")


def store(value, path: Union[str, Path]) -> None:
    try:
        Path(path).write_text(dumps(to_obj(value)), encoding="utf-8")
    except OSError as e:
        raise IoError(str(e)) from None


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno) from None
    return from_obj(obj)


def load(path: Union[str, Path]):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise IoError(str(e)) from None
    return loads(text)
