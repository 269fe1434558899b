"""
4-coloured graphs encoded as four fixed-point-free involutions.

A graph of order ``n`` has vertices ``0..n-1``; ``inv[c][v]`` is the vertex
joined to ``v`` by the ``c``-coloured edge.  Properness of the colouring is
structural: every vertex has exactly one edge of each colour.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

COLOURS = (0, 1, 2, 3)
PAIRS = tuple(combinations(COLOURS, 2))
TRIPLES = tuple(combinations(COLOURS, 3))


class GraphError(ValueError):
    """Raised for malformed involution tables or violated preconditions."""


@dataclass(frozen=True)
class BicolouredCycle:
    """A connected component of the subgraph spanned by two colours.

    ``vertices`` starts at the smallest vertex and leaves it along the edge
    of colour ``colours[0]``; edges then alternate between the two colours.
    """

    colours: tuple[int, int]
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def edges(self) -> list[tuple[int, int, int]]:
        """Edges as ``(colour, u, w)`` in traversal order."""
        k = len(self.vertices)
        out = []
        for t in range(k):
            out.append((self.colours[t % 2], self.vertices[t], self.vertices[(t + 1) % k]))
        return out


@dataclass(frozen=True)
class PartitionPair:
    """A splitting of the four colours into two complementary pairs."""

    first: tuple[int, int]
    second: tuple[int, int]

    def __post_init__(self):
        if sorted(self.first + self.second) != list(COLOURS):
            raise GraphError(f"{self.first}, {self.second} do not partition the colours")
        object.__setattr__(self, "first", tuple(sorted(self.first)))
        object.__setattr__(self, "second", tuple(sorted(self.second)))
        if self.first > self.second:
            first, second = self.second, self.first
            object.__setattr__(self, "first", first)
            object.__setattr__(self, "second", second)

    @classmethod
    def from_pair(cls, a: int, b: int) -> "PartitionPair":
        rest = tuple(c for c in COLOURS if c not in (a, b))
        return cls((a, b), rest)

    def face_pairs(self) -> list[tuple[int, int]]:
        """The four colour pairs whose cycles bound the regular embedding's faces."""
        a, b = self.first
        c, d = self.second
        return [tuple(sorted(p)) for p in ((a, c), (c, b), (b, d), (d, a))]

    def __str__(self) -> str:
        return f"{{{self.first[0]},{self.first[1]}}}|{{{self.second[0]},{self.second[1]}}}"


#: The three partitions in a fixed order; their index is the partition id.
PARTITIONS = (
    PartitionPair((0, 1), (2, 3)),
    PartitionPair((0, 2), (1, 3)),
    PartitionPair((0, 3), (1, 2)),
)


@dataclass(frozen=True)
class EmbeddingSurface:
    partition: PartitionPair
    faces: tuple[BicolouredCycle, ...]
    euler_characteristic: int
    genus: int
    orientable: bool


class ColouredGraph:
    """A regular 4-valent multigraph with a proper 4-edge-colouring.

    Instances are immutable; derived data (cycles, components) is cached.
    """

    def __init__(self, n: int, tables: Sequence[Sequence[int]]):
        if not isinstance(n, int) or n <= 0:
            raise GraphError(f"order must be a positive integer, got {n!r}")
        if n % 2:
            raise GraphError(f"odd order {n}")
        if len(tables) != 4:
            raise GraphError(f"expected 4 involution tables, got {len(tables)}")
        inv = []
        for c, table in enumerate(tables):
            table = tuple(int(x) for x in table)
            if len(table) != n:
                raise GraphError(f"colour {c}: table has {len(table)} entries, expected {n}")
            for v, w in enumerate(table):
                if not 0 <= w < n:
                    raise GraphError(f"colour {c}: index {w} out of range")
                if w == v:
                    raise GraphError(f"colour {c}: fixed point (loop) at vertex {v}")
            for v, w in enumerate(table):
                if table[w] != v:
                    raise GraphError(f"colour {c}: table is not an involution at vertex {v}")
            inv.append(table)
        self.n = n
        self.inv = tuple(inv)

    @classmethod
    def from_involutions(cls, n: int, tables: Sequence[Sequence[int]]) -> "ColouredGraph":
        return cls(n, tables)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "ColouredGraph":
        """Build from ``(colour, u, w)`` triples, one per edge."""
        tables = [[-1] * n for _ in COLOURS]
        for c, u, w in edges:
            if tables[c][u] != -1 or tables[c][w] != -1:
                raise GraphError(f"colour {c}: vertex {u} or {w} already has a {c}-edge")
            tables[c][u] = w
            tables[c][w] = u
        for c in COLOURS:
            if -1 in tables[c]:
                raise GraphError(f"colour {c}: vertex {tables[c].index(-1)} has no {c}-edge")
        return cls(n, tables)

    def __eq__(self, other):
        return isinstance(other, ColouredGraph) and self.n == other.n and self.inv == other.inv

    def __hash__(self):
        return hash((self.n, self.inv))

    def __repr__(self):
        return f"ColouredGraph(n={self.n})"

    def edges(self, colour: int) -> list[tuple[int, int]]:
        t = self.inv[colour]
        return [(v, t[v]) for v in range(self.n) if v < t[v]]

    def relabel(self, perm: Sequence[int], colour_perm: Sequence[int] = COLOURS) -> "ColouredGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]`` and colour ``c`` renamed ``colour_perm[c]``."""
        n = self.n
        tables = [None] * 4
        for c in COLOURS:
            old = self.inv[c]
            new = [0] * n
            for v in range(n):
                new[perm[v]] = perm[old[v]]
            tables[colour_perm[c]] = new
        return ColouredGraph(n, tables)

    # -- cycles and residues ---------------------------------------------

    def cycles(self, i: int, j: int) -> tuple[BicolouredCycle, ...]:
        """All ``{i,j}``-coloured cycles, ordered by smallest vertex."""
        i, j = sorted((i, j))
        cache = self.__dict__.setdefault("_cycles", {})
        if (i, j) not in cache:
            ti, tj = self.inv[i], self.inv[j]
            seen = [False] * self.n
            out = []
            for start in range(self.n):
                if seen[start]:
                    continue
                verts = []
                v = start
                while True:
                    verts.append(v)
                    seen[v] = True
                    w = ti[v]
                    verts.append(w)
                    seen[w] = True
                    v = tj[w]
                    if v == start:
                        break
                out.append(BicolouredCycle((i, j), tuple(verts)))
            cache[(i, j)] = tuple(out)
        return cache[(i, j)]

    def cycle_index(self, i: int, j: int) -> list[int]:
        """Map vertex -> id of its ``{i,j}``-cycle."""
        i, j = sorted((i, j))
        cache = self.__dict__.setdefault("_cycle_index", {})
        if (i, j) not in cache:
            idx = [0] * self.n
            for k, cyc in enumerate(self.cycles(i, j)):
                for v in cyc.vertices:
                    idx[v] = k
            cache[(i, j)] = idx
        return cache[(i, j)]

    def g(self, i: int, j: int) -> int:
        return len(self.cycles(i, j))

    def components(self, colours: Iterable[int]) -> list[list[int]]:
        """Connected components of the subgraph spanned by ``colours``, each sorted."""
        colours = tuple(colours)
        comp = [-1] * self.n
        out = []
        for s in range(self.n):
            if comp[s] != -1:
                continue
            k = len(out)
            comp[s] = k
            stack = [s]
            members = []
            while stack:
                v = stack.pop()
                members.append(v)
                for c in colours:
                    w = self.inv[c][v]
                    if comp[w] == -1:
                        comp[w] = k
                        stack.append(w)
            out.append(sorted(members))
        return out

    @cached_property
    def connected(self) -> bool:
        return len(self.components(COLOURS)) == 1

    @cached_property
    def bipartite(self) -> bool:
        return self.bipartition() is not None

    def bipartition(self) -> list[int] | None:
        """Class (0 or 1) of each vertex, or ``None`` when an odd cycle exists."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] != -1:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for c in COLOURS:
                    w = self.inv[c][v]
                    if side[w] == -1:
                        side[w] = 1 - side[v]
                        stack.append(w)
                    elif side[w] == side[v]:
                        return None
        return side

    @cached_property
    def contracted(self) -> bool:
        return all(len(self.components(t)) == 1 for t in TRIPLES)


@dataclass(frozen=True)
class Residues:
    pair_counts: dict[tuple[int, int], int]
    triple_counts: dict[int, int]
    pair_cycles: dict[tuple[int, int], tuple[BicolouredCycle, ...]]
    triple_components: dict[int, list[list[int]]]


@dataclass(frozen=True)
class Classification:
    connected: bool
    bipartite: bool
    contracted: bool


def from_involutions(n: int, tables: Sequence[Sequence[int]]) -> ColouredGraph:
    return ColouredGraph(n, tables)


def residues(g: ColouredGraph) -> Residues:
    """Counts ``g_ij`` of bicoloured cycles and ``g_î`` of 3-residues missing colour ``i``."""
    pair_cycles = {p: g.cycles(*p) for p in PAIRS}
    comps = {c: g.components(tuple(d for d in COLOURS if d != c)) for c in COLOURS}
    return Residues(
        pair_counts={p: len(v) for p, v in pair_cycles.items()},
        triple_counts={c: len(v) for c, v in comps.items()},
        pair_cycles=pair_cycles,
        triple_components=comps,
    )


def classify(g: ColouredGraph) -> Classification:
    return Classification(g.connected, g.bipartite, g.contracted)


def represents_closed_3manifold(g: ColouredGraph) -> bool:
    """True iff every component of every 3-residue is a gem of the 2-sphere.

    A residue component with ``m`` vertices on colours ``{j,k,l}`` is
    a sphere exactly when ``g_jk + g_jl + g_kl - m/2 == 2`` restricted to it.
    """
    for missing in COLOURS:
        trio = [c for c in COLOURS if c != missing]
        for comp in g.components(trio):
            members = set(comp)
            faces = 0
            for i, j in combinations(trio, 2):
                faces += sum(1 for cyc in g.cycles(i, j) if cyc.vertices[0] in members)
            if faces - len(comp) // 2 != 2:
                return False
    return True


def embedding_surface(g: ColouredGraph, partition: PartitionPair) -> EmbeddingSurface:
    """The regular embedding whose faces are the cycles of the four mixed colour pairs.

    The graph must be connected; otherwise the surface is not connected and
    the genus formula does not apply.
    """
    if not g.connected:
        raise GraphError("embedding surface needs a connected graph")
    faces = []
    for pair in partition.face_pairs():
        faces.extend(g.cycles(*pair))
    chi = len(faces) - g.n
    orientable = g.bipartite
    if orientable:
        genus = (2 - chi) // 2
    else:
        genus = 2 - chi
    return EmbeddingSurface(partition, tuple(faces), chi, genus, orientable)


def regular_genus(g: ColouredGraph) -> int:
    return min(embedding_surface(g, p).genus for p in PARTITIONS)


# -- text format ------------------------------------------------------------


def format_gem(g: ColouredGraph, labels: dict[int, tuple[int, int]] | None = None) -> str:
    lines = [f"gem {g.n}"]
    for c in COLOURS:
        lines.append(f"c{c}: " + " ".join(str(w) for w in g.inv[c]))
    if labels:
        for v in sorted(labels):
            j, i = labels[v]
            lines.append(f"label {v} {j} {i}")
    return "\n".join(lines) + "\n"


def parse_gem(text: str) -> tuple[ColouredGraph, dict[int, tuple[int, int]]]:
    """Parse the gem text format; returns the graph and any ``label`` bindings."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("gem "):
        raise GraphError("missing 'gem <n>' header")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise GraphError(f"bad header {lines[0]!r}") from None
    tables: dict[int, list[int]] = {}
    labels: dict[int, tuple[int, int]] = {}
    for ln in lines[1:]:
        if ln.startswith("label "):
            parts = ln.split()
            if len(parts) != 4:
                raise GraphError(f"bad label line {ln!r}")
            v, j, i = (int(x) for x in parts[1:])
            labels[v] = (j, i)
        elif ln.startswith("c") and ":" in ln:
            head, body = ln.split(":", 1)
            try:
                c = int(head[1:])
                tables[c] = [int(x) for x in body.split()]
            except ValueError:
                raise GraphError(f"bad colour line {ln!r}") from None
        else:
            raise GraphError(f"unrecognised line {ln!r}")
    if sorted(tables) != list(COLOURS):
        raise GraphError("expected colour lines c0..c3")
    return ColouredGraph(n, [tables[c] for c in COLOURS]), labels
