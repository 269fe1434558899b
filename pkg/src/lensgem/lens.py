"""
Crystallizations of lens spaces from 4-plat presentations of 2-bridge links.

The braid ``s2^a1 s1^-a2 s2^a3 ... s2^am`` (m odd) on four strands, closed by
caps joining positions (1,2) and (3,4) at both ends, presents the 2-bridge
link whose 2-fold branched cover is L(p,q).  Every crossing carries a bridge
and becomes a 4-cycle ``v_{j,1} v_{j,2} v_{j,3} v_{j,4}`` of colours 0/1;
2-edges follow the diagram arcs and 3-edges are their mirror images across
the bridge axis.

Vertex ``v_{j,i}`` (1-based ``j`` and ``i``) has index ``4*(j-1) + (i-1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .graph import ColouredGraph, GraphError, format_gem

SIGMA1 = "sigma1"
SIGMA2 = "sigma2"
SLOTS = ("in-upper", "in-lower", "out-upper", "out-lower")


class LensError(ValueError):
    pass


@dataclass(frozen=True)
class LensParams:
    p: int
    q: int


@dataclass(frozen=True)
class ContinuedFraction:
    quotients: tuple[int, ...]

    @property
    def sum(self) -> int:
        return sum(self.quotients)

    def value(self) -> Fraction:
        """Evaluate ``1/(a1 + 1/(a2 + ...))`` exactly."""
        x = Fraction(0)
        for a in reversed(self.quotients):
            x = 1 / (a + x)
        return x


@dataclass(frozen=True)
class Convention:
    """Which strand is the bridge at each generator type, and the chirality.

    Strand ``"A"`` enters at the upper position and leaves at the lower one;
    strand ``"B"`` does the opposite.  The bridge is oriented along the braid,
    its ends become ``v_{j,2}`` (incoming) and ``v_{j,4}`` (outgoing).  The
    understrand end on the left of the oriented bridge becomes ``v_{j,1}``,
    the other ``v_{j,3}``; ``mirrored`` exchanges left and right.
    """

    over_sigma2: str = "A"
    over_sigma1: str = "B"
    mirrored: bool = False


#: Fixed by calibration against the (21,8) worked example and H1 = Z_p.
DEFAULT_CONVENTION = Convention("A", "B", True)


@dataclass(frozen=True)
class FourPlatDiagram:
    """Crossings in braid order and the arcs pairing their corner slots.

    ``crossings[j-1]`` is the generator type of crossing ``c_j``.  Each arc is
    ``((j, slot), (k, slot))`` with 1-based crossing numbers.
    """

    crossings: tuple[str, ...]
    arcs: tuple[tuple[tuple[int, str], tuple[int, str]], ...]
    fourth_string_arc: int

    @property
    def s(self) -> int:
        return len(self.crossings)

    def dump(self) -> str:
        lines = [f"crossing {j} {t}" for j, t in enumerate(self.crossings, 1)]
        for (j, a), (k, b) in self.arcs:
            lines.append(f"arc {j} {a} {k} {b}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LabelledCrystallization:
    graph: ColouredGraph
    params: LensParams
    cf: ContinuedFraction
    diagram: FourPlatDiagram

    @property
    def s(self) -> int:
        return self.diagram.s

    @property
    def labels(self) -> dict[int, tuple[int, int]]:
        return {vertex(j, i): (j, i) for j in range(1, self.s + 1) for i in range(1, 5)}

    def to_text(self) -> str:
        return format_gem(self.graph, self.labels)


@dataclass(frozen=True)
class ProofIndexSets:
    I1: frozenset[int]
    I2: frozenset[int]
    witness_cycle_vertices: frozenset[int]
    inner_region_cycle: frozenset[int]
    inner_region_mirror: frozenset[int]
    fourth_string_cycle: frozenset[int]
    expected_leftover: frozenset[int]


def vertex(j: int, i: int) -> int:
    """Index of ``v_{j,i}``."""
    return 4 * (j - 1) + (i - 1)


def label(v: int) -> tuple[int, int]:
    return v // 4 + 1, v % 4 + 1


def mirror(v: int) -> int:
    """Reflection across the bridge axis: ``v_{j,1} <-> v_{j,3}``, axis vertices fixed."""
    r = v % 4
    if r == 0:
        return v + 2
    if r == 2:
        return v - 2
    return v


def normalize_lens(p: int, q: int) -> LensParams:
    if p < 2:
        raise LensError(f"p={p}: lens space degenerate or sphere (need p >= 2)")
    q %= p
    if gcd(p, q) != 1:
        raise LensError(f"gcd({p}, {q}) = {gcd(p, q)} != 1")
    q = min(q, p - q)
    return LensParams(p, q)


def cf_expand(lp: LensParams) -> ContinuedFraction:
    """Odd-length continued fraction of ``q/p`` with positive quotients."""
    a, b = lp.p, lp.q
    quotients = []
    while b:
        quotients.append(a // b)
        a, b = b, a % b
    if len(quotients) % 2 == 0:
        if quotients[-1] > 1:
            quotients[-1] -= 1
            quotients.append(1)
        else:
            quotients.pop()
            quotients[-1] += 1
    return ContinuedFraction(tuple(quotients))


def S(p: int, q: int) -> int:
    return cf_expand(normalize_lens(p, q)).sum


def braid_word(cf: ContinuedFraction) -> list[str]:
    word = []
    for t, a in enumerate(cf.quotients):
        word.extend([SIGMA2 if t % 2 == 0 else SIGMA1] * a)
    return word


def plat_diagram(cf: ContinuedFraction) -> FourPlatDiagram:
    if len(cf.quotients) % 2 == 0:
        raise LensError("continued fraction must have odd length")
    word = braid_word(cf)
    # nodes: crossing slots (j, slot) and cap ends ("top"/"bottom", position)
    links: dict = {}

    def join(x, y):
        links.setdefault(x, []).append(y)
        links.setdefault(y, []).append(x)

    join(("top", 1), ("top", 2))
    join(("top", 3), ("top", 4))
    join(("bottom", 1), ("bottom", 2))
    join(("bottom", 3), ("bottom", 4))
    last = {pos: ("top", pos) for pos in (1, 2, 3, 4)}
    for j, gen in enumerate(word, 1):
        k = 2 if gen == SIGMA2 else 1
        join(last[k], (j, "in-upper"))
        join(last[k + 1], (j, "in-lower"))
        last[k] = (j, "out-upper")
        last[k + 1] = (j, "out-lower")
    for pos in (1, 2, 3, 4):
        join(last[pos], ("bottom", pos))

    arcs = []
    seen = set()
    fourth = -1
    for j in range(1, len(word) + 1):
        for slot in SLOTS:
            start = (j, slot)
            if start in seen:
                continue
            prev, cur = start, links[start][0]
            through_fourth = False
            while isinstance(cur[0], str):
                if cur == ("top", 4):
                    through_fourth = True
                nxt = links[cur]
                step = nxt[0] if nxt[0] != prev else nxt[1]
                prev, cur = cur, step
            seen.add(start)
            seen.add(cur)
            if through_fourth:
                fourth = len(arcs)
            arcs.append((start, cur))
    return FourPlatDiagram(tuple(word), tuple(arcs), fourth)


def _slot_vertex(j: int, gen: str, slot: str, conv: Convention) -> int:
    over = conv.over_sigma2 if gen == SIGMA2 else conv.over_sigma1
    # strand A: in-upper -> out-lower; strand B: in-lower -> out-upper
    strand = "A" if slot in ("in-upper", "out-lower") else "B"
    incoming = slot.startswith("in")
    if strand == over:
        return vertex(j, 2 if incoming else 4)
    # a bridge running down (A) has the outgoing understrand end on its left;
    # a bridge running up (B) has the incoming one there
    left = incoming if over == "B" else not incoming
    if conv.mirrored:
        left = not left
    return vertex(j, 1 if left else 3)


def crystallization_from_diagram(diagram: FourPlatDiagram, conv: Convention = DEFAULT_CONVENTION) -> ColouredGraph:
    s = diagram.s
    n = 4 * s
    edges = []
    for j in range(1, s + 1):
        v1, v2, v3, v4 = (vertex(j, i) for i in (1, 2, 3, 4))
        edges += [(0, v1, v2), (0, v3, v4), (1, v2, v3), (1, v4, v1)]
    for (j, a), (k, b) in diagram.arcs:
        x = _slot_vertex(j, diagram.crossings[j - 1], a, conv)
        y = _slot_vertex(k, diagram.crossings[k - 1], b, conv)
        edges.append((2, x, y))
        edges.append((3, mirror(x), mirror(y)))
    return ColouredGraph.from_edges(n, edges)


def ferri_crystallization(p: int, q: int | None = None, conv: Convention = DEFAULT_CONVENTION) -> LabelledCrystallization:
    """The labelled crystallization of L(p,q) with ``4 S(p,q)`` vertices."""
    lp = p if isinstance(p, LensParams) else normalize_lens(p, q)
    cf = cf_expand(lp)
    diagram = plat_diagram(cf)
    graph = crystallization_from_diagram(diagram, conv)
    return LabelledCrystallization(graph, lp, cf, diagram)


def proof_index_sets(lc: LabelledCrystallization) -> ProofIndexSets:
    if lc.params.p < 3:
        raise LensError("witness machinery requires p >= 3")
    s = lc.s
    types = lc.diagram.crossings
    I1 = frozenset(j for j in range(2, s) if types[j - 1] == SIGMA1) | {s}
    I2 = frozenset(j for j in range(1, s) if types[j - 1] == SIGMA2)
    dd = {vertex(j, i) for j in I1 for i in (1, 3, 4)} | {vertex(1, i) for i in (1, 2, 3)}
    inner = {vertex(j, i) for j in I2 for i in (1, 4)} | {vertex(s, 1), vertex(s, 4)}
    inner_mirror = {vertex(j, i) for j in I2 for i in (3, 4)} | {vertex(s, 3), vertex(s, 4)}
    fourth = {vertex(1, 1), vertex(1, 3), vertex(2, 2), vertex(s, 4)}
    leftover = {vertex(j, 2) for j in range(3, s)}
    return ProofIndexSets(
        I1, I2, frozenset(dd), frozenset(inner), frozenset(inner_mirror),
        frozenset(fourth), frozenset(leftover),
    )


def colour_swap_symmetry(lc: LabelledCrystallization) -> bool:
    """Check the mirror map is an automorphism exchanging colours 0<->1 and 2<->3."""
    g = lc.graph
    if g.n != 4 * lc.s:
        raise GraphError("labels do not cover the graph")
    swap = (1, 0, 3, 2)
    for c in range(4):
        t, u = g.inv[c], g.inv[swap[c]]
        for v in range(g.n):
            if mirror(t[v]) != u[mirror(v)]:
                return False
    return True


def adjacency_symmetry_holds(lc: LabelledCrystallization) -> bool:
    """``v_{j,2} ~3 v_{k,1}`` iff ``v_{j,2} ~2 v_{k,3}``; ``v_{j,3} ~3 v_{k,4}`` iff ``v_{j,1} ~2 v_{k,4}``."""
    t2, t3 = lc.graph.inv[2], lc.graph.inv[3]
    s = lc.s
    for j in range(1, s + 1):
        for k in range(1, s + 1):
            if (t3[vertex(j, 2)] == vertex(k, 1)) != (t2[vertex(j, 2)] == vertex(k, 3)):
                return False
            if (t3[vertex(j, 3)] == vertex(k, 4)) != (t2[vertex(j, 1)] == vertex(k, 4)):
                return False
    return True


def gem_complexity_upper(lc: LabelledCrystallization) -> int:
    return lc.graph.n // 2 - 1


def admissible_pairs(p_max: int, p_min: int = 2):
    """Normalized ``(p, q)`` with ``p_min <= p <= p_max`` in lexicographic order."""
    for p in range(max(2, p_min), p_max + 1):
        for q in range(1, p // 2 + 1):
            if gcd(p, q) == 1:
                yield p, q
