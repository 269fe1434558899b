"""
Census of small bipartite crystallizations and the lens-space survey.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path

from .code import GemCode, canonical_code
from .gm import gm_complexity, proof_witness_score
from .graph import PAIRS, ColouredGraph, format_gem, regular_genus, represents_closed_3manifold
from .homology import AbelianGroup, first_homology
from .lens import admissible_pairs, colour_swap_symmetry, ferri_crystallization

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogueEntry:
    code: GemCode
    order: int
    g_matrix: dict[tuple[int, int], int]
    regular_genus: int
    h1: AbelianGroup
    gm_value: int

    def index_line(self) -> str:
        g = self.g_matrix
        h1 = str(self.h1).replace(" ", "")
        return f"{self.code} {self.order} {g[(0, 1)]} {g[(0, 2)]} {g[(0, 3)]} {self.regular_genus} {h1} {self.gm_value}"


@dataclass(frozen=True)
class LensSurveyRow:
    p: int
    q: int
    S: int
    order: int
    k_upper: int
    gm_value: int
    bound: int | None
    bound_ok: bool | None
    h1_ok: bool
    symmetry_ok: bool
    sharp_forced: bool

    @property
    def failed(self) -> bool:
        if self.bound_ok is False or not self.h1_ok or not self.symmetry_ok:
            return True
        return self.sharp_forced and self.gm_value != self.bound

    def csv(self) -> str:
        def b(x):
            return "n/a" if x is None else str(x).lower()

        bound = "n/a" if self.bound is None else str(self.bound)
        return (
            f"{self.p},{self.q},{self.S},{self.order},{self.k_upper},{self.gm_value},{bound},"
            f"{b(self.bound_ok)},{b(self.h1_ok)},{b(self.symmetry_ok)},{b(self.sharp_forced)}"
        )


CSV_HEADER = "p,q,S,order,k_upper,gm,bound,bound_ok,h1_ok,symmetry_ok,sharp_forced"


# -- enumeration -------------------------------------------------------------


def _cycle_count(perm) -> int:
    seen = [False] * len(perm)
    count = 0
    for s in range(len(perm)):
        if not seen[s]:
            count += 1
            v = s
            while not seen[v]:
                seen[v] = True
                v = perm[v]
    return count


def _compose_inv(a, b):
    """``b^-1 o a``: the cycles of this permutation are the ``{a,b}``-cycles."""
    binv = [0] * len(b)
    for i, x in enumerate(b):
        binv[x] = i
    return [binv[a[i]] for i in range(len(a))]


def _transitive(gens, h: int) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for perm in gens:
            w = perm[v]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == h


def _cycle_type_representatives(h: int):
    """One permutation of ``range(h)`` per cycle type."""

    def partitions(k, largest):
        if k == 0:
            yield []
            return
        for part in range(min(k, largest), 0, -1):
            for rest in partitions(k - part, part):
                yield [part] + rest

    for parts in partitions(h, h):
        perm = []
        start = 0
        for part in parts:
            perm.extend(range(start + 1, start + part))
            perm.append(start)
            start += part
        yield perm


def _graph_from_perms(h: int, perms) -> ColouredGraph:
    """Vertices ``0..h-1`` on one side, ``h..2h-1`` on the other; colour 0 pairs ``i`` with ``h+i``."""
    n = 2 * h
    tables = [[(v + h) % n for v in range(n)]]
    for perm in perms:
        t = [0] * n
        for i, x in enumerate(perm):
            t[i] = h + x
            t[h + x] = i
        tables.append(t)
    return ColouredGraph(n, tables)


def _candidates(h: int):
    """Bipartite contracted gems of order ``2h`` whose 3-residues are spheres.

    Colour classes are relabelled so colour 0 is the identity matching and
    the {0,1} pair has the most cycles; colour 1 is fixed up to conjugacy.
    """
    all_perms = [list(p) for p in permutations(range(h))]
    target = h + 2
    for s1 in _cycle_type_representatives(h):
        g01 = _cycle_count(s1)
        for s2 in all_perms:
            g02 = _cycle_count(s2)
            if g02 > g01:
                continue
            g12 = _cycle_count(_compose_inv(s1, s2))
            if g12 > g01 or g01 + g02 + g12 != target:
                continue
            if not _transitive((s1, s2), h):
                continue
            for s3 in all_perms:
                g03 = _cycle_count(s3)
                if g03 > g01:
                    continue
                g13 = _cycle_count(_compose_inv(s1, s3))
                if g13 > g01 or g01 + g03 + g13 != target:
                    continue
                g23 = _cycle_count(_compose_inv(s2, s3))
                if g23 > g01 or g02 + g03 + g23 != target or g12 + g13 + g23 != target:
                    continue
                if not (_transitive((s1, s3), h) and _transitive((s2, s3), h)
                        and _transitive((_compose_inv(s1, s2), _compose_inv(s1, s3)), h)):
                    continue
                yield _graph_from_perms(h, (s1, s2, s3))


def _order_graphs(h: int) -> dict[str, ColouredGraph]:
    found: dict[str, ColouredGraph] = {}
    for g in _candidates(h):
        if not (g.contracted and represents_closed_3manifold(g)):
            continue
        code = canonical_code(g)
        found.setdefault(code.text, g)
    return found


def _entry(code: str, g: ColouredGraph) -> CatalogueEntry:
    return CatalogueEntry(
        code=GemCode(code),
        order=g.n,
        g_matrix={p: g.g(*p) for p in PAIRS},
        regular_genus=regular_genus(g),
        h1=first_homology(g),
        gm_value=gm_complexity(g).value,
    )


def enumerate_crystallizations(max_order: int, jobs: int = 1) -> list[CatalogueEntry]:
    """All bipartite crystallizations of closed 3-manifolds up to ``max_order``, one per code."""
    if max_order < 2 or max_order % 2:
        raise ValueError(f"max_order must be an even integer >= 2, got {max_order}")
    halves = list(range(1, max_order // 2 + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_order = list(pool.map(_order_graphs, halves))
    else:
        per_order = [_order_graphs(h) for h in halves]
    entries = []
    for found in per_order:
        for code, g in found.items():
            entries.append(_entry(code, g))
    entries.sort(key=lambda e: (e.order, e.code.text))
    log.info("catalogue up to order %d: %d entries", max_order, len(entries))
    return entries


def write_catalogue(entries: list[CatalogueEntry], out: Path) -> None:
    from .code import graph_from_code

    out.mkdir(parents=True, exist_ok=True)
    lines = []
    for k, e in enumerate(entries):
        (out / f"gem_{k:04d}.txt").write_text(format_gem(graph_from_code(e.code)))
        lines.append(e.index_line())
    (out / "index.txt").write_text("\n".join(lines) + ("\n" if lines else ""))


# -- lens survey -------------------------------------------------------------


def corollary_family_value(p: int, q: int) -> int | None:
    """Known complexity when ``L(p,q)`` lies in one of the sharp infinite families."""
    if q == 1 and p % 2 == 0 and p >= 4:
        return p - 3
    if p % 4 == 0 and p >= 8 and q == p // 2 - 1:
        return p // 4
    t = q - 1
    if t >= 2 and (p - 1) % (t + 1) == 0:
        r = (p - 1) // (t + 1) - 2
        if t > r > 1 and r % 2 == 1 and t % 2 == 0:
            return r + t
    t = q - 2
    if t >= 2 and (p - 1) % (t + 2) == 0:
        r = (p - 1) // (t + 2) - 1
        if t > r > 1 and r % 2 == 0 and t % 2 == 1:
            return r + t
    return None


def survey_row(pq: tuple[int, int]) -> LensSurveyRow:
    p, q = pq
    lc = ferri_crystallization(p, q)
    g = lc.graph
    s = lc.cf.sum
    h1_ok = (
        g.bipartite and g.contracted and represents_closed_3manifold(g)
        and first_homology(g).is_cyclic_of_order(p)
    )
    symmetry_ok = colour_swap_symmetry(lc)
    gm_value = gm_complexity(g).value
    if p >= 3:
        bound = s - 3
        bound_ok = gm_value <= bound and proof_witness_score(lc).score == bound
        sharp = s <= 8 or corollary_family_value(p, q) is not None
    else:
        bound = bound_ok = None
        sharp = False
    return LensSurveyRow(p, q, s, g.n, g.n // 2 - 1, gm_value, bound, bound_ok, h1_ok, symmetry_ok, sharp)


def survey_lens_range(p_max: int, jobs: int = 1, p_min: int = 2) -> list[LensSurveyRow]:
    """One row per normalized ``(p, q)``; failed flags are reported, not raised."""
    if p_max < 2:
        raise ValueError("p_max must be at least 2")
    pairs = list(admissible_pairs(p_max, p_min))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(survey_row, pairs, chunksize=8))
    else:
        rows = [survey_row(pq) for pq in pairs]
    for row in rows:
        if row.failed:
            log.error("verification failed for L(%d,%d): %s", row.p, row.q, row)
    return rows
