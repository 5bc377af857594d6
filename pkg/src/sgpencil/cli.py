"""Command-line front end.

Every subcommand prints a block of ``key=value`` lines. Exact values use the
coordinate grammar; floating approximations carry an ``_approx`` suffix.
Point and vertex indices are 0-based. Exit status is 0 on success, 2 on bad
input or unmet preconditions, 3 on an internal inconsistency.
"""

from __future__ import annotations

import argparse
import sys

from . import configlib, incidence, pencilgraph, realizer
from .cyclofield import CycloElement, format_element, parse_element
from .errors import InternalInconsistency
from .projgeom import ProjPoint
from .svg import graph_svg


class Report:
    def __init__(self, command):
        self.rows = [("command", command)]

    def add(self, key, value):
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        elif hasattr(value, "coeffs"):
            value = format_element(value)
        elif hasattr(value, "text"):
            value = value.text()
        self.rows.append((key, str(value)))

    def render(self):
        return "".join(f"{k}={v}\n" for k, v in self.rows)


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _config(args):
    return configlib.parse(_read(args.file))


def _apex(text, order):
    parts = text.split(";")
    if len(parts) != 3:
        raise ValueError("--apex needs three ';'-separated coordinates")
    return ProjPoint([parse_element(p, order) for p in parts])


def cmd_gen(args):
    if args.fermat is not None:
        c = configlib.fermat_config(args.fermat)
    elif args.hesse:
        c = configlib.hesse_config()
    else:
        m, counts, seed = args.random
        counts = [int(s) for s in counts.split(",")]
        c = configlib.random_pencil_config(int(m), counts, include_apex=args.include_apex, seed=int(seed))
    return configlib.serialize(c)


def _lines_report(rep, lines):
    for i, s in enumerate(lines):
        rep.add(f"line.{i}", s.line)
        rep.add(f"line.{i}.members", s.members)


def cmd_lines(args):
    c = _config(args)
    lines = incidence.spanned_lines(c)
    rep = Report("lines")
    rep.add("points", len(c))
    rep.add("spanned", len(lines))
    _lines_report(rep, lines)
    return rep.render()


def cmd_ordinary(args):
    c = _config(args)
    lines = incidence.ordinary_lines(c)
    rep = Report("ordinary")
    rep.add("points", len(c))
    rep.add("ordinary", len(lines))
    _lines_report(rep, lines)
    return rep.render()


def cmd_sg_check(args):
    c = _config(args)
    rep = Report("sg-check")
    rep.add("points", len(c))
    rep.add("collinear", incidence.is_collinear(c))
    rep.add("ordinary", len(incidence.ordinary_lines(c)))
    rep.add("sg", incidence.is_sylvester_gallai(c))
    return rep.render()


def _pencil_block(rep, c, apex):
    ps = incidence.pencil_structure(c, apex)
    rep.add("apex", ps.apex)
    rep.add("apex_in_set", ps.apex_in_set)
    rep.add("m", ps.m)
    rep.add("counts", ps.counts)
    for i, (line, members) in enumerate(zip(ps.lines, ps.per_line_members)):
        rep.add(f"pencil_line.{i}", line)
        rep.add(f"pencil_line.{i}.members", members)
    br = incidence.theorem_bound_report(c, apex)
    rep.add("max_line_count", br.max_line_count)
    rep.add("bound", br.bound)
    rep.add("exceeds", br.exceeds)
    rep.add("sg", br.sg)
    rep.add("consistent", br.consistent)


def cmd_pencil(args):
    c = _config(args)
    rep = Report("pencil")
    if args.search is not None:
        found = incidence.find_concurrency_points(c, args.search)
        rep.add("max_m", args.search)
        rep.add("found", len(found))
        for i, (p, m) in enumerate(found):
            rep.add(f"apex.{i}", p)
            rep.add(f"apex.{i}.m", m)
        return rep.render()
    _pencil_block(rep, c, _apex(args.apex, c.order))
    return rep.render()


def _witness_block(rep, w):
    rep.add("line", w.line)
    rep.add("members", w.members)
    rep.add("slope", w.k)


def cmd_graph(args):
    c = _config(args)
    run = pencilgraph.run_pipeline(c, _apex(args.apex, c.order))
    np_ = run.pencil
    rep = Report("graph")
    rep.add("m", np_.m)
    rep.add("heavy_line", np_.heavy)
    rep.add("direction_t", str(np_.t))
    rep.add("direction", np_.direction)
    for a, (y, x) in enumerate(zip(np_.ys, run.minimal.xs)):
        rep.add(f"vertex.{a}.y", y)
        rep.add(f"vertex.{a}.xmin", x)
    if run.witness is not None:
        rep.add("result", "witness")
        _witness_block(rep, run.witness)
        return rep.render()
    g = run.graph
    rep.add("result", "graph")
    rep.add("edges", len(g.edges))
    for i, e in enumerate(g.edges):
        rep.add(f"edge.{i}", (e.a, e.b))
        rep.add(f"edge.{i}.k", e.k)
        rep.add(f"edge.{i}.d", e.d)
    rep.add("planar", run.planarity.planar)
    rep.add("forest", run.acyclicity.forest)
    b = run.bounds
    rep.add("binom_bound", b.binom_bound)
    rep.add("planar_bound", b.planar_bound)
    rep.add("forest_bound", b.forest_bound)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(graph_svg(g, title=f"support graph, m={np_.m}"))
        rep.add("svg", args.svg)
    return rep.render()


def cmd_find_ordinary(args):
    c = _config(args)
    out = pencilgraph.find_ordinary_line_concurrent(c, _apex(args.apex, c.order))
    rep = Report("find-ordinary")
    if isinstance(out, pencilgraph.OrdinaryLineWitness):
        rep.add("result", "witness")
        _witness_block(rep, out)
    else:
        rep.add("result", "bound-not-exceeded")
        if out.graph is not None:
            rep.add("edges", len(out.graph.edges))
            rep.add("forest", pencilgraph.check_acyclic(out.graph).forest)
        if out.witness is not None:
            _witness_block(rep, out.witness)
    return rep.render()


def cmd_realize(args):
    t = realizer.parse_graph(_read(args.graph_file))
    res = realizer.realize(t, budget=args.budget, seed=args.seed)
    rep = Report("realize")
    rep.add("v", t.v)
    rep.add("edges", len(t.edges))
    rep.add("status", res.status)
    rep.add("candidates", res.candidates)
    if res.points is not None:
        for a, ((rx, ix), (ry, iy)) in enumerate(res.points):
            rep.add(f"point.{a}.x", CycloElement.gaussian(rx, ix))
            rep.add(f"point.{a}.y", CycloElement.gaussian(ry, iy))
    if res.witness is not None:
        rep.add("obstruction_edge", res.witness.edge)
        rep.add("obstruction_vertex", res.witness.vertex)
        rep.add("obstruction_kind", res.witness.kind)
    return rep.render()


def cmd_green_check(args):
    c = _config(args)
    run = pencilgraph.run_pipeline(c, _apex(args.apex, c.order))
    if run.graph is None or not run.graph.edges:
        raise ValueError("pipeline produced no support edges to build an envelope from")
    poly = [parse_element(v, c.order) for v in args.polygon.split(",")]
    res = pencilgraph.green_boundary_integral_numeric(
        pencilgraph.Envelope.from_graph(run.graph), poly, args.resolution)
    rep = Report("green-check")
    rep.add("edges", len(run.graph.edges))
    rep.add("resolution", args.resolution)
    rep.add("integral_approx", f"{res.value:.12g}")
    rep.add("h_approx", f"{res.h:.12g}")
    return rep.render()


def build_parser():
    p = argparse.ArgumentParser(prog="sgpencil", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a configuration file to stdout")
    grp = g.add_mutually_exclusive_group(required=True)
    grp.add_argument("--fermat", type=int, metavar="N")
    grp.add_argument("--hesse", action="store_true")
    grp.add_argument("--random", nargs=3, metavar=("M", "COUNTS", "SEED"))
    g.add_argument("--include-apex", action="store_true")
    g.set_defaults(func=cmd_gen)

    for name, func in (("lines", cmd_lines), ("ordinary", cmd_ordinary), ("sg-check", cmd_sg_check)):
        s = sub.add_parser(name)
        s.add_argument("file", nargs="?", default="-")
        s.set_defaults(func=func)

    s = sub.add_parser("pencil")
    s.add_argument("file", nargs="?", default="-")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--apex")
    grp.add_argument("--search", type=int, metavar="MAX_M")
    s.set_defaults(func=cmd_pencil)

    s = sub.add_parser("graph")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--apex", required=True)
    s.add_argument("--svg")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("find-ordinary")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--apex", required=True)
    s.set_defaults(func=cmd_find_ordinary)

    s = sub.add_parser("realize")
    s.add_argument("graph_file", nargs="?", default="-")
    s.add_argument("--budget", type=int, default=realizer.DEFAULT_BUDGET)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("green-check")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--apex", required=True)
    s.add_argument("--polygon", required=True)
    s.add_argument("--resolution", type=int, default=1000)
    s.set_defaults(func=cmd_green_check)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
