"""
Canonical code of a connected 4-coloured graph.

Every colour permutation and start vertex gives a numbering by breadth-first
search (neighbours explored in colour order).  The canonical numbering is
the one whose adjacency rows ``(row of vertex 0, row of vertex 1, ...)`` form
the least integer sequence; the code string lists the involution tables in
that numbering.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .graph import ColouredGraph, GraphError

COLOUR_PERMUTATIONS = tuple(permutations(range(4)))


@dataclass(frozen=True, order=True)
class GemCode:
    text: str

    def __str__(self) -> str:
        return self.text

    @property
    def order(self) -> int:
        return int(self.text.split("|", 1)[0])


def _candidate(g: ColouredGraph, order: tuple[int, ...], start: int, best: list[int] | None):
    """Numbering from ``start`` exploring colours ``order[0], order[1], ...``.

    Returns ``(rows, numbering)`` or ``None`` once the rows exceed ``best``.
    """
    n = g.n
    tabs = [g.inv[c] for c in order]
    new = [-1] * n
    new[start] = 0
    queue = deque([start])
    nxt = 1
    rows: list[int] = []
    smaller = best is None
    pos = 0
    while queue:
        v = queue.popleft()
        for t in tabs:
            w = t[v]
            if new[w] == -1:
                new[w] = nxt
                nxt += 1
                queue.append(w)
            x = new[w]
            if not smaller:
                b = best[pos]
                if x > b:
                    return None
                if x < b:
                    smaller = True
            rows.append(x)
            pos += 1
    return rows, new


def canonical_numbering(g: ColouredGraph) -> tuple[list[int], tuple[int, ...]]:
    """Best vertex numbering and the colour order it uses."""
    if not g.connected:
        raise GraphError("canonical code needs a connected graph")
    best_rows = None
    best = None
    for order in COLOUR_PERMUTATIONS:
        for start in range(g.n):
            res = _candidate(g, order, start, best_rows)
            if res is None:
                continue
            rows, new = res
            if best_rows is None or rows < best_rows:
                best_rows, best = rows, (new, order)
    return best


def canonical_code(g: ColouredGraph) -> GemCode:
    new, order = canonical_numbering(g)
    n = g.n
    parts = [str(n)]
    for c in order:
        t = g.inv[c]
        table = [0] * n
        for v in range(n):
            table[new[v]] = new[t[v]]
        parts.append(",".join(map(str, table)))
    return GemCode("|".join(parts))


def graph_from_code(code: GemCode | str) -> ColouredGraph:
    text = code.text if isinstance(code, GemCode) else code
    head, *tables = text.split("|")
    n = int(head)
    if len(tables) != 4:
        raise GraphError(f"malformed code {text!r}")
    return ColouredGraph(n, [[int(x) for x in t.split(",")] for t in tables])
