"""
GM-complexity of a crystallization.

Fix a partition ``{a,b}|{c,d}``, an ``{a,b}``-cycle ``D`` and a ``{c,d}``-cycle
``D'``.  Cutting the regular embedding along every edge outside ``D`` and
``D'`` leaves regions made of faces glued across the edges of ``D`` and
``D'``.  The score of a region ``X`` is the number of vertices outside
``V(D) | V(D') | V(X)``; the complexity is the least score.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graph import PARTITIONS, BicolouredCycle, ColouredGraph, GraphError, PartitionPair, represents_closed_3manifold
from .lens import LabelledCrystallization, LensError, proof_index_sets, vertex


class DisjointSet:
    """Union-find with path halving and union by size."""

    def __init__(self, count: int):
        self.parent = list(range(count))
        self.size = [1] * count

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True


@dataclass(frozen=True)
class RegionDecomposition:
    partition: PartitionPair
    D: BicolouredCycle
    Dprime: BicolouredCycle
    faces: tuple[BicolouredCycle, ...]
    regions: tuple[tuple[int, ...], ...]
    region_vertices: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class GMWitness:
    partition: PartitionPair
    D: BicolouredCycle
    Dprime: BicolouredCycle
    D_id: int
    Dprime_id: int
    region: tuple[BicolouredCycle, ...]
    region_face_ids: tuple[int, ...]
    leftover: frozenset[int]

    @property
    def score(self) -> int:
        return len(self.leftover)

    def report(self) -> dict:
        return {
            "partition": [list(self.partition.first), list(self.partition.second)],
            "D": {"id": self.D_id, "colours": list(self.D.colours), "vertices": list(self.D.vertices)},
            "Dprime": {"id": self.Dprime_id, "colours": list(self.Dprime.colours), "vertices": list(self.Dprime.vertices)},
            "region_faces": list(self.region_face_ids),
            "leftover": sorted(self.leftover),
            "score": self.score,
        }


@dataclass(frozen=True)
class GMResult:
    value: int
    witness: GMWitness
    per_partition: dict[str, int]


def _face_table(g: ColouredGraph, partition: PartitionPair):
    """Faces of the embedding in a fixed order, and vertex -> face id per colour pair."""
    faces = []
    owner = {}
    for pair in sorted(partition.face_pairs()):
        idx = [0] * g.n
        for cyc in g.cycles(*pair):
            for v in cyc.vertices:
                idx[v] = len(faces)
            faces.append(cyc)
        owner[pair] = idx
    return faces, owner


def _face(owner, x: int, y: int):
    return owner[(x, y) if x < y else (y, x)]


def _gluings(owner, cyc: BicolouredCycle, other: tuple[int, int]):
    """Face pairs glued across the edges of ``cyc``.

    Every vertex of the cycle carries both its colours' edges in the cycle;
    an edge of colour ``x`` separates the ``{x,c}`` and ``{x,d}`` faces.
    """
    c, d = other
    out = []
    for x in cyc.colours:
        fc, fd = _face(owner, x, c), _face(owner, x, d)
        for v in cyc.vertices:
            out.append((fc[v], fd[v]))
    return out


def region_decomposition(g: ColouredGraph, partition: PartitionPair, D: BicolouredCycle, Dprime: BicolouredCycle) -> RegionDecomposition:
    if D.colours != partition.first or D not in g.cycles(*partition.first):
        raise GraphError(f"D is not a {partition.first}-cycle of the graph")
    if Dprime.colours != partition.second or Dprime not in g.cycles(*partition.second):
        raise GraphError(f"D' is not a {partition.second}-cycle of the graph")
    faces, owner = _face_table(g, partition)
    ds = DisjointSet(len(faces))
    for a, b in _gluings(owner, D, partition.second) + _gluings(owner, Dprime, partition.first):
        ds.union(a, b)
    groups: dict[int, list[int]] = {}
    for f in range(len(faces)):
        groups.setdefault(ds.find(f), []).append(f)
    regions = sorted(tuple(v) for v in groups.values())
    verts = tuple(frozenset().union(*(faces[f].vertex_set for f in r)) for r in regions)
    return RegionDecomposition(partition, D, Dprime, tuple(faces), tuple(regions), verts)


def _popcount(x: int) -> int:
    return x.bit_count()


def _search_partition(g: ColouredGraph, pid: int, d_ids=None):
    """Best ``(score, pid, D id, D' id, region id, region faces)`` for one partition."""
    partition = PARTITIONS[pid]
    faces, owner = _face_table(g, partition)
    masks = [f.mask for f in faces]
    by_size = sorted(range(len(faces)), key=lambda f: (-len(faces[f]), f))
    dcycles = g.cycles(*partition.first)
    dpcycles = g.cycles(*partition.second)
    glue_d = [_gluings(owner, c, partition.second) for c in dcycles]
    glue_dp = [_gluings(owner, c, partition.first) for c in dpcycles]
    n = g.n
    best = None
    for di in (range(len(dcycles)) if d_ids is None else d_ids):
        dmask = dcycles[di].mask
        for ei, dp in enumerate(dpcycles):
            base = dmask | dp.mask
            # union-find restricted to the faces touched by D and D'
            parent: dict[int, int] = {}

            def find(x):
                while parent.get(x, x) != x:
                    x = parent[x]
                return x

            for a, b in glue_d[di] + glue_dp[ei]:
                ra, rb = find(a), find(b)
                if ra != rb:
                    if rb < ra:
                        ra, rb = rb, ra
                    parent[rb] = ra
                    parent.setdefault(ra, ra)
            merged: dict[int, int] = {}
            for f in parent:
                r = find(f)
                merged[r] = merged.get(r, 0) | masks[f]
            cover, rid = -1, -1
            for r, m in merged.items():
                c = _popcount(base | m)
                if c > cover or (c == cover and r < rid):
                    cover, rid = c, r
            pb = _popcount(base)
            for f in by_size:
                if pb + len(faces[f]) < cover:
                    break
                if f in parent:
                    continue
                c = _popcount(base | masks[f])
                if c > cover or (c == cover and f < rid):
                    cover, rid = c, f
            key = (n - cover, pid, di, ei, rid)
            if best is None or key < best:
                best = key
    _, pid, di, ei, rid = best
    return best, _region_members(g, pid, di, ei)[rid]


def _region_members(g: ColouredGraph, pid: int, di: int, ei: int) -> dict[int, tuple[int, ...]]:
    partition = PARTITIONS[pid]
    dec = region_decomposition(g, partition, g.cycles(*partition.first)[di], g.cycles(*partition.second)[ei])
    return {r[0]: r for r in dec.regions}


def _witness(g: ColouredGraph, pid: int, di: int, ei: int, members) -> GMWitness:
    partition = PARTITIONS[pid]
    faces, _ = _face_table(g, partition)
    D = g.cycles(*partition.first)[di]
    Dp = g.cycles(*partition.second)[ei]
    covered = set(D.vertices) | set(Dp.vertices)
    for f in members:
        covered |= faces[f].vertex_set
    leftover = frozenset(range(g.n)) - covered
    return GMWitness(partition, D, Dp, di, ei, tuple(faces[f] for f in members), tuple(members), leftover)


def _check_crystallization(g: ColouredGraph) -> None:
    if not (g.connected and g.contracted and represents_closed_3manifold(g)):
        raise GraphError("GM-complexity needs a crystallization of a closed 3-manifold")


def _task(args):
    g, pid, d_ids = args
    return _search_partition(g, pid, d_ids)


def gm_complexity(g: ColouredGraph, jobs: int = 1, executor=None) -> GMResult:
    """Exact minimum over all partitions, cycles ``D``, ``D'`` and regions.

    Ties break lexicographically on (partition id, D id, D' id, region id),
    where a region's id is its smallest face id.  The result does not depend
    on ``jobs``.
    """
    _check_crystallization(g)
    tasks = []
    for pid, part in enumerate(PARTITIONS):
        nd = g.g(*part.first)
        chunks = max(1, min(jobs, nd))
        for c in range(chunks):
            tasks.append((g, pid, list(range(c, nd, chunks))))
    if jobs > 1 or executor is not None:
        if executor is None:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_task, tasks))
        else:
            results = list(executor.map(_task, tasks))
    else:
        results = [_task(t) for t in tasks]
    per_partition = {}
    for (key, _members) in results:
        name = str(PARTITIONS[key[1]])
        per_partition[name] = min(per_partition.get(name, key[0]), key[0])
    key, members = min(results, key=lambda r: r[0])
    score, pid, di, ei, _rid = key
    witness = _witness(g, pid, di, ei, members)
    assert witness.score == score
    return GMResult(score, witness, per_partition)


def proof_witness_score(lc: LabelledCrystallization) -> GMWitness:
    """The explicit witness built from the external and inner regions of the plat.

    ``D`` is the ``{0,2}``-cycle through ``v_{1,1}``, ``D'`` the ``{1,3}``-cycle
    through ``v_{1,3}`` and the region is the one containing the ``{2,3}``-cycle
    of the fourth string.
    """
    if lc.params.p < 3:
        raise LensError("witness machinery requires p >= 3")
    g = lc.graph
    pid = 1
    partition = PARTITIONS[pid]
    assert partition.first == (0, 2)
    dcyc = g.cycles(0, 2)
    dpcyc = g.cycles(1, 3)
    di = g.cycle_index(0, 2)[vertex(1, 1)]
    ei = g.cycle_index(1, 3)[vertex(1, 3)]
    dec = region_decomposition(g, partition, dcyc[di], dpcyc[ei])
    faces = dec.faces
    target = next(f for f, cyc in enumerate(faces) if cyc.colours == (2, 3) and vertex(lc.s, 4) in cyc.vertex_set)
    members = next(r for r in dec.regions if target in r)
    w = _witness(g, pid, di, ei, members)
    expected = proof_index_sets(lc).expected_leftover
    if w.leftover != expected:
        raise GraphError(f"witness leftover {sorted(w.leftover)} differs from {sorted(expected)}")
    return w
