"""A walk through the Hesse configuration.

Nine points, twelve lines, every line through three points: no ordinary
line, so it is a Sylvester-Gallai configuration. We then look at it through
pencils of concurrent lines and compare against the m - 2 bound.
"""

from sgpencil.configlib import fermat_config, hesse_config, serialize
from sgpencil.incidence import (
    find_concurrency_points, ordinary_lines, pencil_structure, spanned_lines, theorem_bound_report,
)
from sgpencil.projgeom import ProjPoint

h = hesse_config()
print("The configuration file format:\n")
print(serialize(h))

lines = spanned_lines(h)
print(f"{len(lines)} spanned lines, multiplicities {sorted({s.multiplicity for s in lines})}")
print(f"ordinary lines: {len(ordinary_lines(h))}\n")

print("Seen from one of its own points, the other eight sit on four lines of two:")
ps = pencil_structure(h, h.points[0])
print(f"  m = {ps.m}, counts = {ps.counts}, apex in set = {ps.apex_in_set}\n")

print("Fermat configurations sit on n + 2 lines through [0:0:1], two of them")
print("carrying n points. That meets the m - 2 bound exactly:")
for n in range(3, 7):
    r = theorem_bound_report(fermat_config(n), ProjPoint(0, 0, 1))
    print(f"  n={n}: m={r.m} max={r.max_line_count} bound={r.bound} sg={r.sg}")

print("\nApexes with at most 4 pencil lines in the Hesse configuration:")
found = find_concurrency_points(h, 4)
print(f"  {len(found)} found, all of them configuration points: "
      f"{all(p in h.points for p, _ in found)}")
