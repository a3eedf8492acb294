import pytest
from hypothesis import given, strategies as st

from gltcomb.partitions import (
    Bipartition,
    Partition,
    bipartition_neighbors,
    bipartitions_up_to,
    n_weight,
    partitions_of,
    partitions_up_to,
    BLACK_ADD,
    WHITE_REMOVE,
)


partitions = st.integers(min_value=0, max_value=6).map(
    lambda n: partitions_of(n)
).flatmap(st.sampled_from)


def test_parse_and_str():
    assert Partition.parse("[3,1]") == Partition.of(3, 1)
    assert Partition.parse("[]") == Partition.of()
    assert str(Partition.of(3, 1)) == "[3,1]"
    with pytest.raises(ValueError):
        Partition.parse("[1,3]")
    with pytest.raises(ValueError):
        Partition.parse("3,1")


def test_basic_stats():
    nu = Partition.of(4, 2, 1)
    assert nu.size == 7
    assert nu.length == 3
    assert nu.row(1) == 4
    assert nu.row(10) == 0
    assert list(nu.cells()) == [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (3, 1)]


def test_transpose():
    assert Partition.of(3, 1).transpose() == Partition.of(2, 1, 1)
    assert Partition.of().transpose() == Partition.of()


@given(partitions)
def test_transpose_involution(nu):
    assert nu.transpose().transpose() == nu


def test_contains():
    assert Partition.of(3, 1).contains(Partition.of(2, 1))
    assert not Partition.of(3, 1).contains(Partition.of(1, 1, 1))


def test_corner_contents():
    nu = Partition.of(3, 1)
    # addable cells: (1,4) content 3, (2,2) content 0, (3,1) content -2
    assert nu.addable_contents() == [3, 0, -2]
    # removable cells: (1,3) content 2, (2,1) content -1
    assert nu.removable_contents() == [2, -1]


def test_add_remove_box():
    nu = Partition.of(1)
    assert nu.add_box(1) == Partition.of(2)
    assert nu.add_box(-1) == Partition.of(1, 1)
    assert nu.add_box(0) is None
    assert Partition.of(2).remove_box(1) == Partition.of(1)
    assert Partition.of(2).remove_box(0) is None


@given(partitions, st.integers(min_value=-7, max_value=7))
def test_add_remove_roundtrip(nu, a):
    plus = nu.add_box(a)
    if plus is not None:
        assert plus.size == nu.size + 1
        assert plus.remove_box(a) == nu
    minus = nu.remove_box(a)
    if minus is not None:
        assert minus.add_box(a) == nu


@given(partitions)
def test_exactly_one_more_addable_than_removable(nu):
    assert len(nu.addable_contents()) == len(nu.removable_contents()) + 1


def test_n_weight():
    # +1 at an addable content, -1 at a removable content, 0 elsewhere
    nu = Partition.of(2, 1)
    assert n_weight(nu, 2) == 1
    assert n_weight(nu, 0) == 1
    assert n_weight(nu, -2) == 1
    assert n_weight(nu, 1) == -1
    assert n_weight(nu, -1) == -1
    assert n_weight(nu, 5) == 0


def test_partition_counts():
    for n, count in enumerate([1, 1, 2, 3, 5, 7, 11, 15]):
        assert len(partitions_of(n)) == count
    assert len(partitions_up_to(4)) == 1 + 1 + 2 + 3 + 5


def test_bipartition_parse_and_conjugate():
    lam = Bipartition.parse("[[3,1],[2]]")
    assert lam.black == Partition.of(3, 1)
    assert lam.white == Partition.of(2)
    assert lam.size == 6
    conj = lam.conjugate()
    assert conj.black == Partition.of(3, 1)
    assert conj.white == Partition.of(1, 1)


def test_bipartitions_up_to_sorted_and_complete():
    index = bipartitions_up_to(3)
    assert len(index) == 1 + 2 + 5 + 10
    sizes = [bp.size for bp in index]
    assert sizes == sorted(sizes)
    assert len(set(index)) == len(index)


def test_neighbors():
    lam = Bipartition.of((1,), (1,))
    assert bipartition_neighbors(lam, 1, BLACK_ADD) == frozenset(
        [Bipartition.of((2,), (1,))]
    )
    assert bipartition_neighbors(lam, 0, WHITE_REMOVE) == frozenset(
        [Bipartition.of((1,), ())]
    )
    assert bipartition_neighbors(lam, 5, BLACK_ADD) == frozenset()


def test_json_roundtrip():
    lam = Bipartition.of((3, 1), (2,))
    assert lam.to_json() == [[3, 1], [2]]
    assert Partition.of(3, 1).to_json() == [3, 1]
