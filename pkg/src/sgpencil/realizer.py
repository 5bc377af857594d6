"""Search for point sets whose maximal support graph is a prescribed graph.

A point set ``(x_a, y_a)`` realizes a labeled target graph when
:func:`pencilgraph.max_support_graph` returns exactly the target's edges.
Forests are searched for with a randomized heuristic; graphs with a cycle
are answered with an explicit cycle obstruction.

Heuristic: whether the line through points ``a`` and ``b`` supports the set
depends on the real parts of the ``x`` and on ``im(x_b - x_a)`` only, and the
dependence on that imaginary gap is linear. So after drawing ``y`` and
``re(x)`` each target edge has an interval of admissible gaps, and in a forest
the gaps along edges can be chosen independently. Non-edges are then checked
and the candidate is redrawn if any of them is supported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import networkx as nx

from .cyclofield import CycloElement
from .errors import ConfigSyntaxError, GenericityError
from .pencilgraph import SupportViolation, cycle_obstruction, max_support_graph, p2_failures

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class TargetGraph:
    """A simple graph on vertices ``0..v-1`` (written 1-based in text)."""

    v: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            a, b = sorted(e)
            if a == b or not (0 <= a < self.v and 0 <= b < self.v):
                raise ValueError(f"bad edge {e} for v={self.v}")
            norm.add((a, b))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, v, edges):
        return cls(v, frozenset(tuple(sorted(e)) for e in edges))

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.v))
        g.add_edges_from(self.edges)
        return g

    def is_forest(self):
        return nx.is_forest(self.to_networkx()) if self.v else True

    def sorted_edges(self):
        return sorted(self.edges)


@dataclass(frozen=True)
class RealizationResult:
    status: str  # "realized" | "budget_exhausted" | "provably_unrealizable"
    points: Optional[tuple] = None
    witness: Optional[SupportViolation] = None
    candidates: int = 0


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


# -- target graph text -----------------------------------------------------

def parse_graph(text):
    """Parse ``graph v=4`` followed by ``edge a b`` lines (1-based)."""
    v = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if parts[0] == "graph":
            if v is not None:
                raise ConfigSyntaxError("duplicate graph header", lineno, 1)
            if len(parts) != 2 or not parts[1].startswith("v="):
                raise ConfigSyntaxError("expected 'graph v=<count>'", lineno, 1)
            try:
                v = int(parts[1][2:])
            except ValueError:
                raise ConfigSyntaxError("bad vertex count", lineno, 7) from None
            if v < 1:
                raise ConfigSyntaxError("vertex count must be positive", lineno, 7)
        elif parts[0] == "edge":
            if v is None:
                raise ConfigSyntaxError("edge before graph header", lineno, 1)
            if len(parts) != 3:
                raise ConfigSyntaxError("expected 'edge <a> <b>'", lineno, 1)
            try:
                a, b = int(parts[1]), int(parts[2])
            except ValueError:
                raise ConfigSyntaxError("edge endpoints must be integers", lineno, 6) from None
            if not (1 <= a <= v and 1 <= b <= v) or a == b:
                raise ConfigSyntaxError(f"invalid edge {a} {b}", lineno, 6)
            edges.append((a - 1, b - 1))
        else:
            raise ConfigSyntaxError(f"unknown keyword {parts[0]!r}", lineno, 1)
    if v is None:
        raise ConfigSyntaxError("missing graph header")
    return TargetGraph.from_edges(v, edges)


def serialize_graph(t):
    out = [f"graph v={t.v}"]
    out += [f"edge {a + 1} {b + 1}" for a, b in t.sorted_edges()]
    return "\n".join(out) + "\n"


# -- forests ---------------------------------------------------------------

def _partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _trees(k):
    if k == 1:
        return [nx.empty_graph(1)]
    if k == 2:
        return [nx.path_graph(2)]
    return sorted(nx.nonisomorphic_trees(k), key=lambda t: sorted(d for _, d in t.degree()))


def _multisets(n_items, size, lo=0):
    if size == 0:
        yield ()
        return
    for i in range(lo, n_items):
        for rest in _multisets(n_items, size - 1, i):
            yield (i,) + rest


def enumerate_forests(v):
    """All forests on ``v`` vertices up to isomorphism, fewest edges first."""
    if not 1 <= v <= 8:
        raise ValueError("enumerate_forests supports 1 <= v <= 8")
    out = []
    for part in _partitions(v):
        sizes = sorted(set(part), reverse=True)
        choices = [[]]
        for s in sizes:
            trees = _trees(s)
            mult = part.count(s)
            choices = [c + [(s, combo)] for c in choices for combo in _multisets(len(trees), mult)]
        for choice in choices:
            edges, offset = [], 0
            for s, combo in choice:
                trees = _trees(s)
                for idx in combo:
                    t = nx.convert_node_labels_to_integers(trees[idx])
                    edges += [(a + offset, b + offset) for a, b in t.edges()]
                    offset += s
            out.append(TargetGraph.from_edges(v, edges))
    out.sort(key=lambda t: len(t.edges))
    return out


# -- verification ----------------------------------------------------------

def _to_field(points):
    return [(CycloElement.gaussian(*x), CycloElement.gaussian(*y)) for x, y in points]


def verify_realization(points, t):
    """Exact check that ``points`` (Gaussian-rational pairs) realize ``t``.

    ``points`` holds ``((re x, im x), (re y, im y))`` per vertex, or field
    elements. Genericity (distinct ``y``, determinant condition) is checked
    first and reported as a failed verification.
    """
    if len(points) != t.v:
        return Verification(False, f"expected {t.v} points, got {len(points)}")
    pts = points
    if pts and not isinstance(pts[0][0], CycloElement):
        pts = _to_field(points)
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    if len(set(ys)) != len(ys):
        return Verification(False, "y-coordinates not distinct")
    bad = p2_failures(xs, ys)
    if bad:
        return Verification(False, f"determinant genericity fails at triple {bad[0]}")
    try:
        g = max_support_graph(pts)
    except GenericityError as exc:
        return Verification(False, str(exc))
    got = {(e.a, e.b) for e in g.edges}
    if got != set(t.edges):
        return Verification(False, f"support edges {sorted(got)} != target {t.sorted_edges()}")
    return Verification(True)


# -- fast rational search --------------------------------------------------
# Gaussian rationals are (re, im) pairs of Fractions in this section.

def _cdiv(p, q):
    den = q[0] * q[0] + q[1] * q[1]
    return ((p[0] * q[0] + p[1] * q[1]) / den, (p[1] * q[0] - p[0] * q[1]) / den)


def _gap_coefficients(rx, ys, a, b, c):
    """``(A, B)`` with the support value at ``c`` equal to ``A + B * gap``."""
    w = (ys[b][0] - ys[a][0], ys[b][1] - ys[a][1])
    q = _cdiv((ys[c][0] - ys[a][0], ys[c][1] - ys[a][1]), w)
    dr = rx[b] - rx[a]
    return rx[c] - rx[a] - dr * q[0], q[1]


def _gap_interval(rx, ys, a, b):
    lo, hi = None, None
    for c in range(len(ys)):
        if c in (a, b):
            continue
        A, B = _gap_coefficients(rx, ys, a, b, c)
        if B == 0:
            if A <= 0:
                return None
            continue
        bound = -A / B
        if B > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None and lo >= hi:
        return None
    return lo, hi


def _supported(rx, ix, ys, a, b):
    gap = ix[b] - ix[a]
    for c in range(len(ys)):
        if c in (a, b):
            continue
        A, B = _gap_coefficients(rx, ys, a, b, c)
        if A + B * gap <= 0:
            return False
    return True


def _rand_frac(rng, span, denom):
    return Fraction(rng.randint(-span * denom, span * denom), denom)


def _draw_ys(rng, v):
    ys = set()
    while len(ys) < v:
        ys.add((_rand_frac(rng, 8, rng.choice((1, 2, 3))), _rand_frac(rng, 8, rng.choice((1, 2, 3)))))
    ys = list(ys)
    rng.shuffle(ys)
    return ys


def _draw_real_parts(rng, ys):
    if rng.random() < 0.5:
        return [y[0] * y[0] + y[1] * y[1] + _rand_frac(rng, 4, 7) for y in ys]
    return [_rand_frac(rng, 40, rng.choice((1, 3, 7))) for _ in ys]


def _sample_gap(rng, lo, hi):
    u = Fraction(rng.randint(1, 99), 100)
    if lo is not None and hi is not None:
        return lo + (hi - lo) * u
    spread = Fraction(rng.randint(1, 40), rng.randint(1, 4))
    if lo is not None:
        return lo + spread * u
    if hi is not None:
        return hi - spread * u
    return _rand_frac(rng, 20, 5)


def _candidate(rng, t):
    """One candidate ``(rx, ix, ys)`` whose target edges are all supported, or None."""
    ys = _draw_ys(rng, t.v)
    rx = _draw_real_parts(rng, ys)
    adj = {a: [] for a in range(t.v)}
    for a, b in t.edges:
        adj[a].append(b)
        adj[b].append(a)
    ix = [None] * t.v
    for root in range(t.v):
        if ix[root] is not None:
            continue
        ix[root] = _rand_frac(rng, 30, 5)
        stack = [root]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if ix[b] is not None:
                    continue
                interval = _gap_interval(rx, ys, a, b)
                if interval is None:
                    return None
                ix[b] = ix[a] + _sample_gap(rng, *interval)
                stack.append(b)
    return rx, ix, ys


def _first_cycle(t):
    try:
        cyc = nx.find_cycle(t.to_networkx())
    except nx.NetworkXNoCycle:
        return None
    return [a for a, _ in cyc]


def realize(t, budget=DEFAULT_BUDGET, seed=0):
    """Look for points realizing ``t``; deterministic in ``seed``.

    Forests come back ``realized`` (with exactly verified points) or
    ``budget_exhausted``. Graphs with a cycle come back
    ``provably_unrealizable`` together with the obstruction found on a sample
    candidate; every sampled candidate is checked to have one.
    """
    rng = random.Random(seed)
    cycle = _first_cycle(t)
    if cycle is not None:
        witness, first_points = None, None
        checked = 0
        while checked < min(budget, 16):
            ys = _draw_ys(rng, t.v)
            rx = _draw_real_parts(rng, ys)
            ix = [_rand_frac(rng, 30, 5) for _ in ys]
            pts = tuple(((r, i), y) for r, i, y in zip(rx, ix, ys))
            field_pts = _to_field(pts)
            try:
                w = cycle_obstruction(field_pts, cycle)
            except GenericityError:
                continue
            checked += 1
            if witness is None:
                witness, first_points = w, pts
        return RealizationResult("provably_unrealizable", first_points, witness, checked)

    target = set(t.edges)
    others = [(a, b) for a in range(t.v) for b in range(a + 1, t.v) if (a, b) not in target]
    for n in range(1, budget + 1):
        cand = _candidate(rng, t)
        if cand is None:
            continue
        rx, ix, ys = cand
        if any(_supported(rx, ix, ys, a, b) for a, b in others):
            continue
        pts = tuple(((r, i), y) for r, i, y in zip(rx, ix, ys))
        if verify_realization(pts, t):
            return RealizationResult("realized", pts, None, n)
    return RealizationResult("budget_exhausted", None, None, budget)
