"""Points and lines of the complex projective plane, with projective transformations.

Points and lines are homogeneous triples of :class:`CycloElement`; both are
kept in canonical form (divided by the last nonzero coordinate), so equality
up to scalar is plain tuple equality. Join and meet share one cross product.
"""

from __future__ import annotations

import math

from .cyclofield import CycloElement, format_element


def _lift_all(values):
    values = [v if isinstance(v, CycloElement) else CycloElement.rational(v, 4) for v in values]
    n = math.lcm(*(v.order for v in values))
    return tuple(v.embed(n) for v in values)


def _canonical(coords):
    coords = _lift_all(coords)
    for c in reversed(coords):
        if not c.is_zero():
            if c == 1:
                return coords
            inv = c.inverse()
            return tuple(x * inv for x in coords)
    raise ValueError("zero point")


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def det3(rows):
    (a, b, c), (d, e, f), (g, h, k) = rows
    return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)


class _Triple:
    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("homogeneous triples have three coordinates")
        self.coords = _canonical(coords)

    @property
    def order(self):
        return self.coords[0].order

    def embed(self, n):
        return type(self)(*(c.embed(n) for c in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash(self.coords)

    def text(self):
        return " ; ".join(format_element(c) for c in self.coords)

    def __repr__(self):
        return f"{type(self).__name__}({self.text()})"


class ProjPoint(_Triple):
    """A point ``[x : y : z]``; finite points are ``[x : y : 1]``."""

    __slots__ = ()

    @classmethod
    def affine(cls, x, y):
        return cls(x, y, 1)

    def is_finite(self):
        return not self.coords[2].is_zero()

    def affine_coords(self):
        if not self.is_finite():
            raise ValueError("point at infinity has no affine coordinates")
        return self.coords[0], self.coords[1]


class ProjLine(_Triple):
    """The line ``a*x + b*y + c*z = 0`` stored as ``(a, b, c)``."""

    __slots__ = ()


LINE_AT_INFINITY = ProjLine(0, 0, 1)


def incident(p, l):
    x, y, z = p.coords
    a, b, c = l.coords
    return (a * x + b * y + c * z).is_zero()


def join(p, q):
    """Line through two distinct points."""
    if p == q:
        raise ValueError("join of identical points")
    return ProjLine(cross(p.coords, q.coords))


def meet(l1, l2):
    """Intersection point of two distinct lines."""
    if l1 == l2:
        raise ValueError("meet of identical lines")
    return ProjPoint(cross(l1.coords, l2.coords))


def collinear(p, q, r):
    return det3([p.coords, q.coords, r.coords]).is_zero()


class Transform:
    """An invertible 3x3 matrix acting on column vectors of coordinates."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        rows = [_lift_all(row) for row in matrix]
        n = math.lcm(*(r[0].order for r in rows))
        self.matrix = tuple(tuple(c.embed(n) for c in row) for row in rows)
        if det3(self.matrix).is_zero():
            raise ValueError("singular transform")

    @classmethod
    def identity(cls):
        return cls([[1 if i == j else 0 for j in range(3)] for i in range(3)])

    @classmethod
    def scaling(cls, c):
        """``[x : y : z] -> [c x : c y : z]``."""
        return cls([[c, 0, 0], [0, c, 0], [0, 0, 1]])

    def det(self):
        return det3(self.matrix)

    def inverse(self):
        r0, r1, r2 = self.matrix
        # column j of the inverse is a cross product of the other two rows
        cols = [cross(r1, r2), cross(r2, r0), cross(r0, r1)]
        d = self.det()
        inv = [[cols[j][i] / d for j in range(3)] for i in range(3)]
        return Transform(inv)

    def compose(self, other):
        """``self`` after ``other``."""
        a, b = self.matrix, other.matrix
        return Transform([[sum((a[i][k] * b[k][j] for k in range(3)), CycloElement.rational(0, a[0][0].order))
                           for j in range(3)] for i in range(3)])

    def _mul(self, v):
        return [self.matrix[i][0] * v[0] + self.matrix[i][1] * v[1] + self.matrix[i][2] * v[2]
                for i in range(3)]

    def apply(self, p):
        return ProjPoint(self._mul(p.coords))

    def apply_line(self, l):
        """Image of a line (multiplication by the inverse transpose)."""
        inv = self.inverse().matrix
        v = l.coords
        return ProjLine([inv[0][i] * v[0] + inv[1][i] * v[1] + inv[2][i] * v[2] for i in range(3)])

    def __eq__(self, other):
        if not isinstance(other, Transform):
            return NotImplemented
        return self.matrix == other.matrix

    def __repr__(self):
        rows = "; ".join(", ".join(format_element(c) for c in row) for row in self.matrix)
        return f"Transform([{rows}])"


def apply(t, p):
    return t.apply(p)


_BASIS = (ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1))
_BASIS_LINES = (ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1))


def normalization_transform(p, l):
    """Transform sending ``p`` to ``[1:0:0]`` and ``l`` to the line ``z = 0``.

    Builds the basis ``(p, q, r)`` with ``q`` the first standard basis point
    on ``l`` other than ``p`` (else the first usable meet of ``l`` with a
    coordinate line) and ``r`` the first standard basis point off ``l``, then
    inverts the matrix with those columns.
    """
    if not incident(p, l):
        raise ValueError("point is not on the line")
    q = None
    for e in _BASIS:
        if incident(e, l) and e != p:
            q = e
            break
    if q is None:
        for e in _BASIS_LINES:
            if e == l:
                continue
            cand = meet(l, e)
            if cand != p:
                q = cand
                break
    r = next(e for e in _BASIS if not incident(e, l))
    cols = [p.coords, q.coords, r.coords]
    m = Transform([[cols[j][i] for j in range(3)] for i in range(3)])
    return m.inverse()
