"""Finding ordinary lines when a pencil line is overloaded.

If one of m concurrent lines carries more than m - 2 points, the support
graph cannot be built: some pencil-minimal line meets only one minimal point
besides its point at infinity. That line is ordinary, and we return it.
Each witness is checked against a brute-force scan of all spanned lines.
"""

from sgpencil.configlib import fermat_config, random_pencil_config
from sgpencil.incidence import ordinary_lines, theorem_bound_report
from sgpencil.pencilgraph import OrdinaryLineWitness, find_ordinary_line_concurrent
from sgpencil.projgeom import ProjPoint

for seed, (m, counts) in enumerate([(3, (2, 1, 1)), (4, (3, 1, 2, 1)), (5, (4, 2, 1, 1, 3))]):
    c = random_pencil_config(m, counts, seed=seed)
    r = theorem_bound_report(c, c.apex)
    w = find_ordinary_line_concurrent(c, c.apex)
    brute = {s.members for s in ordinary_lines(c)}
    print(f"m={m} counts={counts}: heaviest {r.max_line_count} > bound {r.bound}")
    print(f"  witness line {w.line.text()}")
    print(f"  through points {w.members}; brute force agrees: {w.members in brute}")

print("\nRemove one point from the Hesse configuration and it stops being SG:")
c = fermat_config(3).without(ProjPoint(1, -1, 0))
out = find_ordinary_line_concurrent(c, ProjPoint(0, 0, 1))
print(f"  pipeline result: {type(out).__name__}")
if isinstance(out, OrdinaryLineWitness):
    print(f"  ordinary line through {out.members}")
else:
    print(f"  bound not exceeded; the pipeline still found {out.witness.members}")
