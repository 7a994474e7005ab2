"""Name resolution for shipped presentations, bundles, morphisms, diagrams.

verify_all and `check --all` traverse the checked presentations plus all
sixteen bundles; morphisms and derived diagrams resolve by name for the
CLI and tests but are exercised by their own suites.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .. import rewrite as rw
from ..diagram import Diagram
from ..presentation import Presentation, validate_presentation
from .presentations import CHECKED_PRESENTATIONS, PRESENTATION_NAMES, build_presentation


def bundle_names() -> tuple[str, ...]:
    from .bundles import BUNDLE_NAMES

    return BUNDLE_NAMES


def morphism_names() -> tuple[str, ...]:
    from .morphisms import MORPHISM_NAMES

    return MORPHISM_NAMES


def derived_names() -> tuple[str, ...]:
    from .bundles import DERIVED_NAMES

    return DERIVED_NAMES


def is_registry_name(token: str) -> bool:
    return (
        token in PRESENTATION_NAMES
        or token in bundle_names()
        or token in morphism_names()
        or token in derived_names()
    )


def resolve(token: str):
    if token in PRESENTATION_NAMES:
        return build_presentation(token)
    if token in bundle_names():
        from .bundles import build_bundle

        return build_bundle(token)
    if token in morphism_names():
        from .morphisms import build_morphism

        return build_morphism(token)
    if token in derived_names():
        from .bundles import derived_diagram

        return derived_diagram(token)
    raise KeyError(token)


def kind_of(obj) -> str:
    if isinstance(obj, Presentation):
        return "presentation"
    if isinstance(obj, rw.ProofBundle):
        return "bundle"
    if isinstance(obj, Diagram):
        return "diagram"
    return "morphism"


def checklist() -> list[tuple[str, object]]:
    """The items `check --all` runs: 10 presentations then 16 bundles."""
    from .bundles import build_bundle

    items: list[tuple[str, object]] = [
        (name, build_presentation(name)) for name in CHECKED_PRESENTATIONS
    ]
    items += [(name, build_bundle(name)) for name in bundle_names()]
    return items


@dataclass(frozen=True)
class ReportItem:
    name: str
    kind: str
    ok: bool
    detail: str
    seconds: float


@dataclass(frozen=True)
class Report:
    items: tuple[ReportItem, ...]

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)


def verify_all() -> Report:
    """Validate every checked presentation and replay every bundle."""
    out = []
    for name, obj in checklist():
        t0 = time.perf_counter()
        if isinstance(obj, Presentation):
            v = validate_presentation(obj)
            ok, detail = v.ok, str(v)
        else:
            rep = rw.check_derivation(obj)
            ok, detail = rep.ok, str(rep)
        out.append(ReportItem(name, kind_of(obj), ok, detail, time.perf_counter() - t0))
    return Report(tuple(out))
