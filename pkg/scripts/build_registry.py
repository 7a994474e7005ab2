"""Regenerate the serialized registry under src/cellrw/data/.

Writes one canonical JSON file per presentation, bundle, morphism, and a
few named diagrams, plus the golden render files.  Idempotent; the test
suite asserts the committed files match what this script produces.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from cellrw import render as rd
from cellrw import serialize as sz
from cellrw.adjlib import build_presentation
from cellrw.adjlib import core as c
from cellrw.adjlib.bundles import BUNDLE_NAMES, build_bundle
from cellrw.adjlib.morphisms import MORPHISM_NAMES, build_morphism
from cellrw.adjlib.presentations import PRESENTATION_NAMES

DATA = ROOT / "src" / "cellrw" / "data"

NAMED_DIAGRAMS = {
    "id_X": c.ID_X,
    "eta": c.D_ETA,
    "eps": c.D_EPS,
    "snake_l": c.SNAKE_L,
    "snake_r": c.SNAKE_R,
    "SW_src": c.SW_SRC,
    "SW2_src": c.SW2_SRC,
}


def main() -> None:
    for sub in ("presentations", "bundles", "morphisms", "diagrams", "golden"):
        (DATA / sub).mkdir(parents=True, exist_ok=True)
    for name in PRESENTATION_NAMES:
        sz.store(build_presentation(name), DATA / "presentations" / f"{name}.json")
    for name in BUNDLE_NAMES:
        sz.store(build_bundle(name), DATA / "bundles" / f"{name}.json")
    for name in MORPHISM_NAMES:
        sz.store(build_morphism(name), DATA / "morphisms" / f"{name}.json")
    for name, d in NAMED_DIAGRAMS.items():
        sz.store(d, DATA / "diagrams" / f"{name}.json")

    p41 = build_presentation("Adj41")
    goldens = {
        "id_X.txt": rd.render(c.ID_X, p41, "txt"),
        "eta.txt": rd.render(c.D_ETA, p41, "txt"),
        "snake_l.txt": rd.render(c.SNAKE_L, p41, "txt"),
        "SW_src_filmstrip.txt": rd.render(c.SW_SRC, p41, "txt", slices=True),
        "eta.svg": rd.render(c.D_ETA, p41, "svg"),
        "snake_l.svg": rd.render(c.SNAKE_L, p41, "svg"),
    }
    for fname, data in goldens.items():
        (DATA / "golden" / fname).write_bytes(data)
    print(f"wrote registry under {DATA}")


if __name__ == "__main__":
    main()
