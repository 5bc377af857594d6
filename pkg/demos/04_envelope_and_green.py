"""The convex envelope u and the two Green checks.

u is the maximum of the affine functions y -> re(d - k y) over the support
lines. It passes through (y_a, re x_a*) at every vertex, it is convex, and
its boundary flux over a region is non-positive, zero only when u is affine.
Around any cycle the imaginary parts of x* telescope to zero; a strict flux
inequality on that cycle would contradict this, which is why cycles cannot occur.
"""

from fractions import Fraction

from sgpencil.configlib import fermat_config
from sgpencil.cyclofield import CycloElement, format_element
from sgpencil.pencilgraph import (
    Envelope, envelope_eval, green_boundary_integral_numeric, green_cycle_sum, run_pipeline,
)
from sgpencil.projgeom import ProjPoint

g = run_pipeline(fermat_config(3), ProjPoint(0, 0, 1)).graph
u = Envelope.from_graph(g)
print("Envelope of the Fermat n=3 support graph at its vertices:")
for y, x in zip(g.ys, g.xs):
    val, _ = envelope_eval(u, y)
    lhs = f"u({format_element(y)})"
    print(f"  {lhs:<22} = {format_element(val):>3}    re x* = {format_element(x.re())}")

i = CycloElement.zeta(4)
zero, one = CycloElement.rational(0), CycloElement.rational(1)
half = Fraction(1, 2)

flat = Envelope.through_pairs([(0, 0), (1, i)])
r = green_boundary_integral_numeric(flat, [zero, one, i], 1000)
print(f"\nAffine u over a triangle: flux {r.value:+.2e} (h = {r.h:.2e})")

creased = Envelope(((zero, zero), (-one, -half * one), (i, -half * one)))
r = green_boundary_integral_numeric(creased, [zero, 2 * one, 2 * i], 1000)
print(f"u = max(0, re y - 1/2, im y - 1/2) over a triangle: flux {r.value:+.4f}")

xs = [CycloElement.gaussian(3, 1), CycloElement.gaussian(-2, 5), CycloElement.gaussian(0, -7)]
print(f"\nTelescoping sum around a 3-cycle: {format_element(green_cycle_sum(xs, [0, 1, 2]))}")
