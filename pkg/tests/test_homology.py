import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lensgem.graph import PARTITIONS, GraphError, PartitionPair
from lensgem.homology import AbelianGroup, first_homology, relation_matrix, smith_normal_form
from lensgem.lens import ferri_crystallization
from tests.oracles import invariant_factors


def test_snf_identity():
    g = smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert g.is_trivial()


def test_snf_2x2():
    # oracle: d1 = gcd of entries = 2, d1*d2 = |det| = 8
    assert invariant_factors([[2, 4], [6, 8]], 2) == (0, (2, 4))
    assert smith_normal_form([[2, 4], [6, 8]]) == AbelianGroup(0, (2, 4))


def test_snf_no_relators():
    assert smith_normal_form([], ncols=1) == AbelianGroup(1, ())
    with pytest.raises(ValueError):
        smith_normal_form([])


def test_snf_large_entries_exact():
    big = 10**30
    assert smith_normal_form([[big, 0], [0, big * 3]]) == AbelianGroup(0, (big, 3 * big))


@settings(max_examples=300, deadline=None)
@given(
    st.integers(0, 4).flatmap(
        lambda r: st.integers(1, 4).flatmap(
            lambda c: st.tuples(
                st.just(c), st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
            )
        )
    )
)
def test_snf_matches_determinantal_divisors(case):
    ncols, rows = case
    got = smith_normal_form(rows, ncols)
    assert (got.free_rank, got.torsion) == invariant_factors(rows, ncols)


def test_snf_chain_and_determinant(rng):
    from tests.oracles import _det

    for _ in range(200):
        m = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        d = abs(_det(m))
        got = smith_normal_form(m)
        for a, b in zip(got.torsion, got.torsion[1:]):
            assert b % a == 0
        if d:
            assert got.free_rank == 0 and got.order == d


def test_abelian_group_rendering():
    assert str(AbelianGroup(0, ())) == "0"
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    with pytest.raises(ValueError):
        AbelianGroup(0, (2, 3))


def test_relation_matrix_s3(s3):
    m = relation_matrix(s3, PARTITIONS[0])
    assert m.rows == () and m.ncols == 0


def test_relation_matrix_rp3():
    g = ferri_crystallization(2, 1).graph
    m = relation_matrix(g, PartitionPair((0, 1), (2, 3)))
    assert m.ncols == 1 and len(m.rows) == 1
    assert abs(m.rows[0][0]) == 2


def test_relation_matrix_dimensions(lens_21_8):
    g = lens_21_8.graph
    for part in PARTITIONS:
        m = relation_matrix(g, part)
        assert len(m.rows) == g.g(*part.second) - 1
        assert m.ncols == g.g(*part.first) - 1
        assert smith_normal_form(m.rows, m.ncols) == AbelianGroup(0, (21,))


def test_relation_matrix_rejects(k4_example):
    with pytest.raises(GraphError):
        relation_matrix(k4_example, PARTITIONS[0])


def test_first_homology(s3):
    assert first_homology(s3).is_trivial()
    assert first_homology(ferri_crystallization(2, 1).graph) == AbelianGroup(0, (2,))
    assert first_homology(ferri_crystallization(21, 8).graph) == AbelianGroup(0, (21,))
