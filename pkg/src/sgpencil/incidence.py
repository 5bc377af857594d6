"""Global incidence analysis of a configuration.

``spanned_lines`` is a deliberately plain pair enumeration; it is the
ground-truth oracle the pencil-graph pipeline is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .projgeom import ProjLine, ProjPoint, incident, join, meet


@dataclass(frozen=True)
class SpannedLine:
    line: ProjLine
    members: tuple

    @property
    def multiplicity(self):
        return len(self.members)


@dataclass(frozen=True)
class PencilStructure:
    apex: ProjPoint
    apex_in_set: bool
    lines: tuple
    per_line_members: tuple

    @property
    def m(self):
        return len(self.lines)

    @property
    def counts(self):
        return tuple(len(ms) for ms in self.per_line_members)


@dataclass(frozen=True)
class BoundReport:
    m: int
    max_line_count: int
    bound: int
    exceeds: bool
    sg: bool

    @property
    def consistent(self):
        # a Sylvester-Gallai configuration never puts more than m - 2 points on a pencil line
        return not (self.sg and self.exceeds)


def spanned_lines(c):
    """Every line through at least two points, with its full member list.

    Lines are ordered by their lowest-index pair.
    """
    pts = c.points
    n = len(pts)
    if n < 2:
        raise ValueError("spanned_lines needs at least two points")
    covered = set()
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in covered:
                continue
            line = join(pts[i], pts[j])
            members = tuple(k for k in range(n) if incident(pts[k], line))
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    covered.add((members[a], members[b]))
            out.append(SpannedLine(line, members))
    return out


def ordinary_lines(c):
    return [s for s in spanned_lines(c) if s.multiplicity == 2]


def is_collinear(c):
    pts = c.points
    if len(pts) < 3:
        return True
    line = join(pts[0], pts[1])
    return all(incident(p, line) for p in pts[2:])


def is_sylvester_gallai(c):
    """Non-collinear and without ordinary lines."""
    if len(c.points) < 3:
        raise ValueError("Sylvester-Gallai check needs at least three points")
    if is_collinear(c):
        return False
    return not ordinary_lines(c)


def pencil_structure(c, apex):
    """Group the non-apex points by their line through ``apex``.

    Lines appear in order of their first member's index.
    """
    apex = apex.embed(c.order) if apex.order != c.order else apex
    lines = []
    members = []
    apex_in_set = False
    for idx, p in enumerate(c.points):
        if p == apex:
            apex_in_set = True
            continue
        for li, line in enumerate(lines):
            if incident(p, line):
                members[li].append(idx)
                break
        else:
            lines.append(join(apex, p))
            members.append([idx])
    if not lines:
        raise ValueError("configuration consists only of the apex")
    return PencilStructure(apex, apex_in_set, tuple(lines), tuple(tuple(ms) for ms in members))


def find_concurrency_points(c, max_m):
    """Apexes (configuration points or meets of spanned lines) with m <= max_m.

    Returns ``(apex, m)`` pairs sorted by m, candidates in discovery order
    within equal m.
    """
    candidates = list(c.points)
    seen = set(candidates)
    if len(c.points) >= 2:
        lines = [s.line for s in spanned_lines(c)]
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                p = meet(lines[i], lines[j])
                if p not in seen:
                    seen.add(p)
                    candidates.append(p)
    out = []
    for p in candidates:
        try:
            ps = pencil_structure(c, p)
        except ValueError:
            continue
        if ps.m <= max_m:
            out.append((p, ps.m))
    out.sort(key=lambda pm: pm[1])
    return out


def theorem_bound_report(c, apex):
    ps = pencil_structure(c, apex)
    mx = max(ps.counts)
    try:
        sg = is_sylvester_gallai(c)
    except ValueError:
        sg = False
    return BoundReport(m=ps.m, max_line_count=mx, bound=ps.m - 2, exceeds=mx > ps.m - 2, sg=sg)
