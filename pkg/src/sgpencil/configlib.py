"""Named configurations, a seeded generator of pencil configurations, and the
plain-text configuration format.

File format (UTF-8, newline terminated)::

    # comment
    field 12
    point 0 ; 1 ; -z^4

Coordinates use the expression grammar of :func:`cyclofield.parse_element`.
:func:`serialize` writes canonical points, so its output is byte-deterministic
and ``parse(serialize(c)) == c``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclofield import CycloElement, parse_element
from .errors import ConfigSyntaxError
from .projgeom import ProjPoint, collinear


@dataclass(frozen=True)
class Configuration:
    """Distinct projective points over Q(zeta_order).

    ``apex`` optionally records the concurrency point a generator used; it
    takes no part in equality and is not serialized.
    """

    order: int
    points: tuple
    apex: ProjPoint | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.order % 4:
            raise ValueError(f"field order must be divisible by 4 (got {self.order})")
        pts = tuple(p if p.order == self.order else p.embed(self.order) for p in self.points)
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate point in configuration")
        object.__setattr__(self, "points", pts)
        if self.apex is not None and self.apex.order != self.order:
            object.__setattr__(self, "apex", self.apex.embed(self.order))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def index(self, p):
        return self.points.index(p.embed(self.order) if p.order != self.order else p)

    def without(self, p):
        return Configuration(self.order, tuple(q for q in self.points if q != p))


def fermat_config(n):
    """The 3n points ``[0:1:-w^a]``, ``[-w^b:0:1]``, ``[1:-w^c:0]``, ``w = zeta_n``.

    Built in Q(zeta_lcm(n, 4)). For n >= 3 this is a Sylvester-Gallai
    configuration; n = 3 is the Hesse configuration.
    """
    if n < 1:
        raise ValueError("fermat_config needs n >= 1")
    order = math.lcm(n, 4)
    step = order // n
    roots = [CycloElement.zeta(order, a * step) for a in range(n)]
    zero = CycloElement.rational(0, order)
    one = CycloElement.rational(1, order)
    pts = [ProjPoint(zero, one, -w) for w in roots]
    pts += [ProjPoint(-w, zero, one) for w in roots]
    pts += [ProjPoint(one, -w, zero) for w in roots]
    return Configuration(order, tuple(pts))


def hesse_config():
    return fermat_config(3)


def _gauss(rng, span, denom):
    return CycloElement.gaussian(Fraction(rng.randint(-span, span), rng.randint(1, denom)),
                                 Fraction(rng.randint(-span, span), rng.randint(1, denom)))


def random_pencil_config(m, counts, include_apex=False, seed=0, max_tries=1000):
    """Random Gaussian-rational points on ``m`` concurrent lines.

    ``counts[a]`` points go on line ``a`` through a random affine apex. Draws
    are rejected until the only collinear triples are those forced by the
    pencil (points sharing a line), so every other spanned line is ordinary.
    The same seed always gives the same configuration.
    """
    counts = list(counts)
    if m < 2 or len(counts) != m:
        raise ValueError("need m >= 2 and one count per line")
    if any(c < 1 for c in counts):
        raise ValueError("every pencil line needs at least one point")
    rng = random.Random(seed)
    for _ in range(max_tries):
        apex = ProjPoint.affine(_gauss(rng, 6, 3), _gauss(rng, 6, 3))
        ax, ay = apex.affine_coords()
        dirs = []
        while len(dirs) < m:
            d = (_gauss(rng, 4, 1), _gauss(rng, 4, 1))
            if d[0].is_zero() and d[1].is_zero():
                continue
            far = ProjPoint(d[0], d[1], 0)
            if far not in dirs:
                dirs.append(far)
        pts = []
        line_of = []
        for a, (far, c) in enumerate(zip(dirs, counts)):
            dx, dy = far.coords[0], far.coords[1]
            used = set()
            while len(used) < c:
                t = _gauss(rng, 5, 4)
                if t.is_zero() or t in used:
                    continue
                used.add(t)
                pts.append(ProjPoint.affine(ax + t * dx, ay + t * dy))
                line_of.append(a)
        if include_apex:
            pts.append(apex)
            line_of.append(-1)
        if len(set(pts)) != len(pts):
            continue
        if _only_forced_collinearities(pts, line_of):
            return Configuration(4, tuple(pts), apex)
    raise RuntimeError("random_pencil_config: rejection sampling did not converge")


def _only_forced_collinearities(pts, line_of):
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if not collinear(pts[i], pts[j], pts[k]):
                    continue
                groups = {line_of[i], line_of[j], line_of[k]} - {-1}
                if len(groups) != 1:
                    return False
    return True


# -- text format -----------------------------------------------------------

def serialize(c):
    lines = [f"field {c.order}"]
    for p in c.points:
        lines.append(f"point {p.text()}")
    return "\n".join(lines) + "\n"


def parse(text):
    """Parse configuration text; errors carry 1-based line and column."""
    order = None
    pts = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        col = len(body) - len(body.lstrip()) + 1
        keyword, _, rest = stripped.partition(" ")
        if keyword == "field":
            if order is not None:
                raise ConfigSyntaxError("duplicate field header", lineno, col)
            try:
                order = int(rest.strip())
            except ValueError:
                raise ConfigSyntaxError(f"bad field order {rest.strip()!r}", lineno, col + 6) from None
            if order < 1 or order % 4:
                raise ConfigSyntaxError(
                    f"field order must be a positive multiple of 4 (got {order})", lineno, col + 6)
        elif keyword == "point":
            if order is None:
                raise ConfigSyntaxError("point before field header", lineno, col)
            parts = rest.split(";")
            if len(parts) != 3:
                raise ConfigSyntaxError("point needs three ';'-separated coordinates", lineno, col)
            offset = col + len("point ")
            coords = []
            for part in parts:
                coords.append(parse_element(part, order, lineno, offset))
                offset += len(part) + 1
            if all(x.is_zero() for x in coords):
                raise ConfigSyntaxError("zero point", lineno, col)
            p = ProjPoint(coords)
            if p in seen:
                raise ConfigSyntaxError(f"duplicate point (same as line {seen[p]})", lineno, col)
            seen[p] = lineno
            pts.append(p)
        else:
            raise ConfigSyntaxError(f"unknown keyword {keyword!r}", lineno, col)
    if order is None:
        raise ConfigSyntaxError("missing field header")
    return Configuration(order, tuple(pts))


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(c, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(c))
