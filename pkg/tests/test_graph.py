import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lensgem.graph import (
    PAIRS,
    PARTITIONS,
    ColouredGraph,
    GraphError,
    PartitionPair,
    classify,
    embedding_surface,
    format_gem,
    from_involutions,
    parse_gem,
    regular_genus,
    represents_closed_3manifold,
    residues,
)
from lensgem.lens import admissible_pairs, ferri_crystallization


def test_from_involutions_s3(s3):
    assert s3.n == 2
    assert s3.connected


def test_from_involutions_k4_example(k4_example):
    assert k4_example.n == 4
    assert k4_example.connected


@pytest.mark.parametrize(
    "n, tables, message",
    [
        (3, [[1, 0, 2]] * 4, "odd"),
        (2, [[0, 1]] * 4, "fixed point"),
        (4, [[1, 2, 3, 0]] * 4, "involution"),
        (2, [[1, 5]] * 4, "out of range"),
        (2, [[1, 0]] * 3, "4 involution tables"),
    ],
)
def test_from_involutions_rejects(n, tables, message):
    with pytest.raises(GraphError, match=message):
        from_involutions(n, tables)


def test_residues_s3(s3):
    r = residues(s3)
    assert set(r.pair_counts.values()) == {1}
    assert set(r.triple_counts.values()) == {1}


def test_residues_k4_triple(k4_example):
    r = residues(k4_example)
    assert r.pair_counts[(1, 2)] == r.pair_counts[(1, 3)] == r.pair_counts[(2, 3)] == 1
    assert r.pair_counts[(0, 1)] == 2


def test_residues_lens_21_8(lens_21_8):
    g = lens_21_8.graph
    r = residues(g)
    assert r.pair_counts[(0, 1)] == 7
    assert all(len(c) == 4 for c in r.pair_cycles[(0, 1)])


def test_cycles_partition_vertices(lens_21_8):
    g = lens_21_8.graph
    for pair in PAIRS:
        cycles = g.cycles(*pair)
        assert sum(len(c) for c in cycles) == g.n
        assert sorted(v for c in cycles for v in c.vertices) == list(range(g.n))


def test_cycle_normalization(lens_21_8):
    g = lens_21_8.graph
    for i, j in PAIRS:
        for cyc in g.cycles(i, j):
            assert cyc.vertices[0] == min(cyc.vertices)
            assert g.inv[i][cyc.vertices[0]] == cyc.vertices[1]
            for c, u, w in cyc.edges():
                assert g.inv[c][u] == w


def test_classify(s3, k4_example, lens_21_8):
    flags = classify(s3)
    assert flags.connected and flags.bipartite and flags.contracted
    assert not classify(k4_example).bipartite
    flags = classify(lens_21_8.graph)
    assert flags.bipartite and flags.contracted and flags.connected


def test_manifold_check(s3, k4_example, lens_21_8):
    assert represents_closed_3manifold(s3)
    assert not represents_closed_3manifold(k4_example)
    assert represents_closed_3manifold(lens_21_8.graph)


def test_embedding_surface_s3(s3):
    for part in PARTITIONS:
        surf = embedding_surface(s3, part)
        assert len(surf.faces) == 4
        assert surf.euler_characteristic == 2
        assert surf.genus == 0 and surf.orientable


def test_embedding_surface_21_8(lens_21_8):
    g = lens_21_8.graph
    surf = embedding_surface(g, PartitionPair((0, 2), (1, 3)))
    faces = g.g(0, 1) + g.g(0, 3) + g.g(1, 2) + g.g(2, 3)
    assert len(surf.faces) == faces
    assert surf.euler_characteristic == faces - 28
    assert surf.genus == g.g(0, 2) - 1 == g.g(1, 3) - 1


def test_embedding_surface_nonorientable(k4_example):
    surf = embedding_surface(k4_example, PARTITIONS[0])
    assert not surf.orientable
    assert surf.genus == 2 - surf.euler_characteristic


def test_regular_genus_small():
    assert regular_genus(ColouredGraph(2, [[1, 0]] * 4)) == 0
    assert regular_genus(ferri_crystallization(2, 1).graph) == 1
    assert regular_genus(ferri_crystallization(5, 1).graph) == 1


@pytest.mark.parametrize("p", range(3, 11))
def test_regular_genus_standard_lens(p):
    assert regular_genus(ferri_crystallization(p, 1).graph) == 1


def test_standard_identities_on_constructed_graphs():
    for p, q in admissible_pairs(40):
        g = ferri_crystallization(p, q).graph
        for part in PARTITIONS:
            assert g.g(*part.first) == g.g(*part.second)
            surf = embedding_surface(g, part)
            assert surf.euler_characteristic == len(surf.faces) - g.n
            assert 1 - surf.euler_characteristic // 2 == g.g(*part.first) - 1
        assert g.g(0, 1) + g.g(0, 2) + g.g(0, 3) == g.n // 2 + 2


def test_gem_text_roundtrip(lens_21_8):
    text = lens_21_8.to_text()
    assert text.splitlines()[0] == "gem 28"
    assert text.splitlines()[1].startswith("c0: ")
    g, labels = parse_gem(text)
    assert g == lens_21_8.graph
    assert labels == lens_21_8.labels
    assert format_gem(g, labels) == text


def test_gem_text_exact_format(s3):
    assert format_gem(s3) == "gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\n"


@pytest.mark.parametrize("text", ["", "gem x\n", "gem 2\nc0: 1 0\n", "gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\nfoo\n"])
def test_parse_gem_rejects(text):
    with pytest.raises(GraphError):
        parse_gem(text)


@st.composite
def matchings(draw, n):
    verts = draw(st.permutations(range(n)))
    t = [0] * n
    for a, b in zip(verts[::2], verts[1::2]):
        t[a], t[b] = b, a
    return t


@st.composite
def random_graphs(draw):
    n = 2 * draw(st.integers(1, 6))
    return ColouredGraph(n, [draw(matchings(n)) for _ in range(4)])


@settings(max_examples=200, deadline=None)
@given(random_graphs())
def test_cycles_partition_vertices_random(g):
    for pair in PAIRS:
        assert sum(len(c) for c in g.cycles(*pair)) == g.n
    if g.connected:
        for part in PARTITIONS:
            surf = embedding_surface(g, part)
            assert surf.euler_characteristic == len(surf.faces) - g.n
