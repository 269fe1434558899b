"""
Dipole moves.

A dipole of type ``h`` is a pair ``x, y`` joined by exactly the ``h`` edges
with colours in ``C``, with ``x`` and ``y`` in different components of the
subgraph coloured by the other colours.  Eliminating it deletes ``x`` and
``y`` and welds their remaining neighbours colour by colour.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import COLOURS, ColouredGraph, GraphError


@dataclass(frozen=True)
class Dipole:
    vertices: tuple[int, int]
    colours: frozenset[int]

    @property
    def type(self) -> int:
        return len(self.colours)


def _joining_colours(g: ColouredGraph, x: int, y: int) -> frozenset[int]:
    return frozenset(c for c in COLOURS if g.inv[c][x] == y)


def _same_residue(g: ColouredGraph, x: int, y: int, colours) -> bool:
    seen = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        if v == y:
            return True
        for c in colours:
            w = g.inv[c][v]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def is_dipole(g: ColouredGraph, d: Dipole) -> bool:
    x, y = d.vertices
    if x == y or not 1 <= len(d.colours) <= 3:
        return False
    if _joining_colours(g, x, y) != d.colours:
        return False
    others = [c for c in COLOURS if c not in d.colours]
    return not _same_residue(g, x, y, others)


def find_dipoles(g: ColouredGraph) -> list[Dipole]:
    """All eliminable dipoles, ordered by vertex pair."""
    out = []
    for x in range(g.n):
        for y in sorted({g.inv[c][x] for c in COLOURS}):
            if y <= x:
                continue
            d = Dipole((x, y), _joining_colours(g, x, y))
            if len(d.colours) < 4 and is_dipole(g, d):
                out.append(d)
    return out


def eliminate_dipole(g: ColouredGraph, d: Dipole) -> ColouredGraph:
    x, y = d.vertices
    joined = _joining_colours(g, x, y) if x != y else frozenset()
    if x == y or not d.colours or joined != d.colours or len(d.colours) > 3:
        raise GraphError(f"{d} is not a dipole of the graph")
    others = [c for c in COLOURS if c not in d.colours]
    if _same_residue(g, x, y, others):
        raise GraphError(f"{d} is not eliminable: x and y share a residue")
    keep = [v for v in range(g.n) if v not in (x, y)]
    index = {v: k for k, v in enumerate(keep)}
    tables = []
    for c in COLOURS:
        t = list(g.inv[c])
        if c not in d.colours:
            a, b = t[x], t[y]
            t[a], t[b] = b, a
        tables.append([index[t[v]] for v in keep])
    return ColouredGraph(g.n - 2, tables)


def insert_dipole(g: ColouredGraph, colours, anchors: dict[int, int]) -> tuple[ColouredGraph, Dipole]:
    """Add vertices ``x, y`` joined by ``colours``.

    For each remaining colour ``c`` the ``c``-edge at ``anchors[c]`` is cut;
    ``anchors[c]`` is joined to ``x`` and its former neighbour to ``y``.
    """
    colours = frozenset(colours)
    others = [c for c in COLOURS if c not in colours]
    if not 1 <= len(colours) <= 3 or sorted(anchors) != others:
        raise GraphError("anchors must cover exactly the colours outside the dipole")
    n = g.n
    x, y = n, n + 1
    tables = [list(t) + [0, 0] for t in g.inv]
    for c in colours:
        tables[c][x], tables[c][y] = y, x
    for c in others:
        u = anchors[c]
        w = g.inv[c][u]
        tables[c][u], tables[c][x] = x, u
        tables[c][w], tables[c][y] = y, w
    h, d = ColouredGraph(n + 2, tables), Dipole((x, y), colours)
    if not is_dipole(h, d):
        raise GraphError("the cut edges do not separate x from y; no dipole was created")
    return h, d
