"""Which graphs are maximal support graphs of points in C^2?

Cycles never are: every cycle has an edge whose line dips below another
point. Forests are reached by search: draw y and re(x), then choose the
imaginary gaps along the forest edges inside their admissible intervals.
Every hit is verified in exact arithmetic.
"""

import time

from sgpencil.realizer import TargetGraph, enumerate_forests, realize, serialize_graph

print("v  forests  realized  seconds")
for v in range(1, 9):
    t0 = time.perf_counter()
    forests = enumerate_forests(v)
    misses = [t for t in forests if realize(t, budget=20_000).status != "realized"]
    print(f"{v}  {len(forests):7d}  {len(forests) - len(misses):8d}  {time.perf_counter() - t0:7.1f}")
    for t in misses:
        print(f"     not reached: {t.sorted_edges() or 'no edges'}")

print("\nThe edgeless graphs on 2 and 3 vertices are out of reach for any points:")
print("two points always support their line, and for three points the three")
print("support values, weighted by positive factors, sum to zero.")

res = realize(TargetGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
print(f"\nThe 4-cycle:\n{serialize_graph(TargetGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))}"
      f"status {res.status}; obstruction: edge {res.witness.edge}, vertex {res.witness.vertex}, "
      f"{res.witness.kind}")
