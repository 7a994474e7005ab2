"""A guided tour of the engine: build, match, rewrite, check, render.

Run:  python scripts/demo_walkthrough.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cellrw import diagram as dg
from cellrw import render as rd
from cellrw import rewrite as rw
from cellrw.adjlib import build_bundle, build_presentation, derived_diagram
from cellrw.adjlib import core as c


def banner(text: str) -> None:
    print(f"\n== {text} " + "=" * max(0, 60 - len(text)))


def main() -> None:
    p = build_presentation("Adj41")
    banner("the minimal coherent-adjunction presentation")
    counts = p.cell_counts()
    print("cells per dimension:", counts, "relations:", len(p.relations))

    banner("the unit, rendered (source at the bottom)")
    print(rd.render(c.D_ETA, p, "txt").decode(), end="")

    banner("the left snake and its slices")
    print(rd.render(c.SNAKE_L, p, "txt").decode(), end="")
    for i, s in enumerate(dg.slices(c.SNAKE_L, p)):
        print(f"slice {i}:", " ".join(a.gen for a in s.atoms) or "(empty)")

    banner("matching a unit inside the snake")
    pattern = dg.Diagram(2, source=c.ID_X, atoms=(dg.Atom("eta", (0,)),))
    for emb in rw.find_matches(pattern, c.SNAKE_L, p):
        print("embedding at", emb.start, "offsets", emb.offsets)

    banner("one relation application (three-dimensional ancestor)")
    p31 = build_presentation("Adj31")
    rel = p31.relation("pair_C_l_a")
    step = rw.Apply("pair_C_l_a", rw.FORWARD, rw.Embedding(0, (0, 0)))
    out = rw.apply_step(rel.lhs, step, p31)
    print("cusp round trip reduces to the identity:", out == c.ID3_L)

    banner("the swallowtail source, as a filmstrip")
    print(rd.render(c.SW_SRC, p, "txt", slices=True).decode(), end="")

    banner("the derived second swallowtail")
    sw2 = derived_diagram("SW2")
    print("source atoms:", [a.gen for a in sw2.source.atoms])
    print("composite atoms:", [(a.gen, a.pos) for a in sw2.atoms])
    print("target:", dg.boundary(sw2, dg.TGT, p) == c.ID_D_EPS)

    banner("replaying a shipped proof bundle")
    bundle = build_bundle("B1_butterfly1")
    print(bundle.doc)
    for i, s in enumerate(bundle.derivation.steps):
        print(f"  step {i}: {rw.describe_step(s)}")
    print("verdict:", rw.check_derivation(bundle))


if __name__ == "__main__":
    main()
