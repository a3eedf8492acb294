import pytest

from gltcomb.caps import D_inverse, D_matrix, build_caps, mult_D, scan_matching
from gltcomb.diagrams import GENERIC
from gltcomb.matrices import BipartitionMatrix
from gltcomb.partitions import Bipartition, bipartitions_up_to

VAC = Bipartition.of((), ())
ONE = Bipartition.of((1,), (1,))


def test_scan_matching_basic():
    caps, outside, open_crosses = scan_matching(list("xoxo"))
    assert caps == [(0, 1), (2, 3)]
    assert outside == []
    assert open_crosses == []


def test_scan_matching_nested_and_outside():
    caps, outside, open_crosses = scan_matching(list("oxxoo"))
    assert caps == [(1, 4), (2, 3)]
    assert outside == [0]
    assert open_crosses == []
    _, _, leftover = scan_matching(list("xxo"))
    assert leftover == [0]


def test_scan_matching_ignores_arrows():
    caps, _, _ = scan_matching(list("x><o"))
    assert caps == [(0, 3)]


def test_vacuum_caps_are_nested():
    cd = build_caps(VAC, 0)
    assert cd.cap_end(-1) == 0
    for l, r in cd.caps:
        assert l + r == -1


def test_caps_require_integer_t():
    with pytest.raises(ValueError):
        build_caps(VAC, GENERIC)


def test_worked_multiplicity_example():
    assert mult_D(ONE, VAC, 0) == 1
    assert mult_D(VAC, ONE, 0) == 0


def test_diagonal_is_one():
    for lam in bipartitions_up_to(3):
        for t in (-2, 0, 2, GENERIC):
            assert mult_D(lam, lam, t) == 1


def test_generic_t_is_delta():
    for lam in bipartitions_up_to(3):
        for mu in bipartitions_up_to(3):
            want = 1 if lam == mu else 0
            assert mult_D(lam, mu, GENERIC) == want


def test_stability_band():
    index = bipartitions_up_to(3)
    for lam in index:
        for mu in index:
            for t in range(-8, 9):
                if abs(t) > lam.size + mu.size:
                    want = 1 if lam == mu else 0
                    assert mult_D(lam, mu, t) == want


def test_nested_move_needs_inner_cap():
    # the vacuum block at t=0: moving only the outer cap of a nested pair is
    # not a standard-filtration multiplicity
    lam = Bipartition.of((2, 1), (2, 1))
    assert mult_D(lam, VAC, 0) == 0
    assert mult_D(lam, ONE, 0) == 1
    both = Bipartition.of((2, 2), (2, 2))
    assert mult_D(both, VAC, 0) == 1


def test_moves_increase_size():
    for t in (-2, 0, 1):
        for lam in bipartitions_up_to(4):
            for mu in bipartitions_up_to(4):
                if lam != mu and mult_D(lam, mu, t):
                    assert lam.size > mu.size


def test_d_matrix_unitriangular_and_inverse():
    for t in (-1, 0, 2):
        d = D_matrix(t, 4)
        assert d.is_unitriangular()
        inv = D_inverse(t, 4)
        assert d.mul(inv) == BipartitionMatrix.identity(4)
        assert inv.mul(d) == BipartitionMatrix.identity(4)


def test_d_matrix_generic_is_identity():
    assert D_matrix(GENERIC, 3) == BipartitionMatrix.identity(3)


def test_cap_json():
    payload = build_caps(ONE, 0).to_json()
    assert "caps" in payload and "window" in payload
    assert all(len(c) == 2 for c in payload["caps"])
