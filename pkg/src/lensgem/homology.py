"""
First homology of a crystallization through its Heegaard-type presentation.

For a partition ``{a,b}|{c,d}`` the ``{a,b}``-cycles (all but one) act as
generators and the ``{c,d}``-cycles (all but one) as relators.  A relator
meets a generator at every shared vertex, with sign ``+1`` on bipartition
class 0 and ``-1`` on class 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import PARTITIONS, ColouredGraph, GraphError, PartitionPair


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank`` plus cyclic factors ``Z/d`` with ``d1 | d2 | ...``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors {self.torsion} break the divisibility chain")

    @property
    def order(self) -> int | None:
        """Group order, ``None`` when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_cyclic_of_order(self, p: int) -> bool:
        if p == 1:
            return self.is_trivial()
        return self.free_rank == 0 and self.torsion == (p,)

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class RelationMatrix:
    partition: PartitionPair
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def dump(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def smith_normal_form(matrix, ncols: int | None = None) -> AbelianGroup:
    """Cokernel of the row lattice of an integer matrix.

    ``matrix`` is a list of rows.  The result is ``Z^ncols / span(rows)``;
    ``ncols`` must be given when there are no rows.  Pivots are chosen by
    minimal absolute value; Python integers keep the arithmetic exact.
    """
    a = [list(map(int, row)) for row in matrix]
    if ncols is None:
        if not a:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(a[0])
    if any(len(row) != ncols for row in a):
        raise ValueError("ragged matrix")
    nrows = len(a)
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                x = a[i][t]
                if x:
                    q = x // piv
                    ri, rt = a[i], a[t]
                    for j in range(t, ncols):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        dirty = True
            for j in range(t + 1, ncols):
                x = a[t][j]
                if x:
                    q = x // piv
                    for i in range(t, nrows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = None
                for i in range(t + 1, nrows):
                    for j in range(t + 1, ncols):
                        if a[i][j] % piv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rb, rt = a[bad], a[t]
                for j in range(t, ncols):
                    rt[j] += rb[j]
                continue
            # move the smallest remaining entry of row/column t into the pivot
            best = (abs(piv), t, t)
            for i in range(t + 1, nrows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, ncols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, bi, bj = best
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
            if bj != t:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    torsion = tuple(d for d in diag if d > 1)
    return AbelianGroup(free_rank=ncols - len(diag), torsion=torsion)


def relation_matrix(g: ColouredGraph, partition: PartitionPair) -> RelationMatrix:
    side = g.bipartition()
    if side is None:
        raise GraphError("relation matrix needs a bipartite graph")
    if not g.contracted:
        raise GraphError("relation matrix needs a contracted graph")
    gen_index = g.cycle_index(*partition.first)
    ngen = g.g(*partition.first)
    rows = []
    for cyc in g.cycles(*partition.second)[1:]:
        row = [0] * ngen
        for v in cyc.vertices:
            row[gen_index[v]] += 1 if side[v] == 0 else -1
        rows.append(tuple(row[1:]))
    return RelationMatrix(partition, tuple(rows), ngen - 1)


def first_homology(g: ColouredGraph) -> AbelianGroup:
    """H1 of the represented manifold; the three partitions must agree."""
    results = []
    for part in PARTITIONS:
        m = relation_matrix(g, part)
        results.append(smith_normal_form(m.rows, m.ncols))
    if any(r != results[0] for r in results[1:]):
        raise GraphError(
            "partitions disagree on H1: " + ", ".join(str(r) for r in results)
        )
    return results[0]

