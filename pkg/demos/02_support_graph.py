"""The support graph of a Fermat configuration, step by step.

We send the apex to [1:0:0] and a heaviest pencil line to infinity, pick a
generic direction, take the point of least real part on every finite line,
and join two of those minimal points for each point at infinity. The result
is a planar forest, which caps the number of points at infinity at m - 2.
"""

from pathlib import Path

from sgpencil.configlib import fermat_config
from sgpencil.cyclofield import format_element
from sgpencil.pencilgraph import run_pipeline
from sgpencil.projgeom import ProjPoint
from sgpencil.svg import graph_svg

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

for n in (3, 4, 5):
    run = run_pipeline(fermat_config(n), ProjPoint(0, 0, 1))
    np_, g = run.pencil, run.graph
    print(f"Fermat n={n}: m={np_.m}, direction c = {format_element(np_.direction)} (t = {np_.t})")
    for a, (y, x) in enumerate(zip(g.ys, g.xs)):
        print(f"  vertex {a}: y = {format_element(y):<28} x* = {format_element(x)}")
    for e in g.edges:
        print(f"  edge {e.a}-{e.b}  slope k = {format_element(e.k)}")
    b = run.bounds
    print(f"  planar={b.planar} forest={b.forest} edges={b.edges} "
          f"bounds: C(m-1,2)={b.binom_bound} planar={b.planar_bound} forest={b.forest_bound}")
    path = out_dir / f"fermat{n}_support_graph.svg"
    path.write_text(graph_svg(g, title=f"Fermat n={n}"))
    print(f"  drawing written to {path}\n")
