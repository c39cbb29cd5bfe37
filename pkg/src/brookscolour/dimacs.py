"""DIMACS .col edge-format parsing and deterministic text emission.

Grammar accepted by :func:`parse_dimacs`: comment lines ``c ...``, exactly
one problem line ``p edge <n> <m>`` before any edge, and ``m`` edge lines
``e <u> <v>`` with 1-based endpoints.  Anything else is an error with a
1-based line number, never silently skipped; duplicate edges (either
orientation) and self-loops are rejected at the offending line.
"""

from __future__ import annotations

import numpy as np

from .colouring import BrooksReport, Colouring
from .errors import CountMismatchError, DimacsSyntaxError, IncompleteColouringError
from .graph import Graph, build_graph


def _read_lines(source) -> list[str]:
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = source
    return text.splitlines()


def parse_dimacs(source) -> Graph:
    """Parse DIMACS edge format from a string or text stream into a Graph.

    Vertex ids are converted from the 1-based external form to 0-based.
    """
    lines = _read_lines(source)
    n = -1
    declared_m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            raise DimacsSyntaxError(lineno, "blank line")
        tag = tokens[0]
        if tag == "c":
            continue
        if tag == "p":
            if n >= 0:
                raise DimacsSyntaxError(lineno, "second problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise DimacsSyntaxError(lineno, "problem line must be 'p edge <n> <m>'")
            try:
                n = int(tokens[2])
                declared_m = int(tokens[3])
            except ValueError:
                raise DimacsSyntaxError(lineno, "problem line must be 'p edge <n> <m>'") from None
            if n < 0 or declared_m < 0:
                raise DimacsSyntaxError(lineno, "negative counts in problem line")
            continue
        if tag == "e":
            if n < 0:
                raise DimacsSyntaxError(lineno, "edge line before problem line")
            if len(tokens) != 3:
                raise DimacsSyntaxError(lineno, "edge line must be 'e <u> <v>'")
            try:
                u = int(tokens[1])
                v = int(tokens[2])
            except ValueError:
                raise DimacsSyntaxError(lineno, "edge endpoints must be integers") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsSyntaxError(lineno, f"endpoint out of range 1..{n}")
            if u == v:
                raise DimacsSyntaxError(lineno, f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DimacsSyntaxError(lineno, f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            if len(edges) >= declared_m:
                raise CountMismatchError(lineno, declared_m, len(edges) + 1)
            edges.append((u - 1, v - 1))
            continue
        raise DimacsSyntaxError(lineno, f"unknown line type {tag!r}")
    if n < 0:
        raise DimacsSyntaxError(lineno + 1, "missing problem line")
    if len(edges) != declared_m:
        raise CountMismatchError(lineno + 1, declared_m, len(edges))
    return build_graph(n, edges)


def write_dimacs(g: Graph) -> str:
    """Graph as DIMACS edge format, edges in canonical order, 1-based ids."""
    out = [f"p edge {g.n} {g.m}"]
    for u, v in zip(g.edge_u.tolist(), g.edge_v.tolist()):
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def emit_colouring(colouring: Colouring, report: BrooksReport | None = None) -> str:
    """Colouring as text: ``s col <num_colours>`` then one ``v <vertex> <colour>``
    line per vertex, 1-based.  A report adds leading comment lines.  Output
    is byte-exact for identical inputs.

    Raises :class:`IncompleteColouringError` when a vertex is uncoloured.
    """
    if not colouring.is_complete():
        missing = int(np.flatnonzero(colouring.colours <= 0)[0])
        raise IncompleteColouringError(f"vertex {missing} is uncoloured")
    out = []
    if report is not None:
        for comp in report.components:
            out.append(
                f"c component {comp.component}: n={comp.vertices} m={comp.edges}"
                f" delta={comp.delta} category={comp.category}"
                f" bound={comp.bound} colours={comp.colours_used}")
        out.append(f"c bound {report.bound}")
    out.append(f"s col {colouring.num_colours}")
    for v, c in enumerate(colouring.colours.tolist()):
        out.append(f"v {v + 1} {c}")
    return "\n".join(out) + "\n"


def parse_colouring(source, n: int) -> Colouring:
    """Parse the ``s col``/``v`` format back into a Colouring for n vertices.

    Strict: exactly one ``s`` line, every ``v`` line in range and assigned
    once, and the declared colour count must match the maximum used.
    """
    lines = _read_lines(source)
    declared = -1
    s_line = -1
    colours = np.zeros(n, np.int64)
    assigned = np.zeros(n, bool)
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            raise DimacsSyntaxError(lineno, "blank line")
        tag = tokens[0]
        if tag == "c":
            continue
        if tag == "s":
            if declared >= 0:
                raise DimacsSyntaxError(lineno, "second solution line")
            if len(tokens) != 3 or tokens[1] != "col":
                raise DimacsSyntaxError(lineno, "solution line must be 's col <k>'")
            try:
                declared = int(tokens[2])
            except ValueError:
                raise DimacsSyntaxError(lineno, "solution line must be 's col <k>'") from None
            s_line = lineno
            continue
        if tag == "v":
            if len(tokens) != 3:
                raise DimacsSyntaxError(lineno, "vertex line must be 'v <vertex> <colour>'")
            try:
                v = int(tokens[1])
                c = int(tokens[2])
            except ValueError:
                raise DimacsSyntaxError(lineno, "vertex line must be 'v <vertex> <colour>'") from None
            if not 1 <= v <= n:
                raise DimacsSyntaxError(lineno, f"vertex out of range 1..{n}")
            if c < 1:
                raise DimacsSyntaxError(lineno, "colours must be positive")
            if assigned[v - 1]:
                raise DimacsSyntaxError(lineno, f"vertex {v} coloured twice")
            assigned[v - 1] = True
            colours[v - 1] = c
            continue
        raise DimacsSyntaxError(lineno, f"unknown line type {tag!r}")
    if declared < 0:
        raise DimacsSyntaxError(lineno + 1, "missing solution line")
    used = int(colours.max(initial=0))
    if declared != used:
        raise DimacsSyntaxError(s_line, f"declared {declared} colours but {used} are used")
    return Colouring(colours)
