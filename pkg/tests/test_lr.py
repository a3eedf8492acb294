from gltcomb.lr import B_entry, B_matrix, lr_coeff, schur_polynomial, schur_product_oracle
from gltcomb.partitions import Bipartition, Partition, partitions_up_to

P = Partition.of


def test_pieri_row():
    # multiplying by a single row adds a horizontal strip
    assert lr_coeff(P(3, 1), P(2, 1), P(1)) == 1
    assert lr_coeff(P(2, 2), P(2, 1), P(1)) == 1
    assert lr_coeff(P(2, 1, 1), P(2, 1), P(1)) == 1
    assert lr_coeff(P(4), P(2, 1), P(1)) == 0


def test_classic_multiplicity_two():
    # s_{21} * s_{21} contains s_{321} with multiplicity 2
    assert lr_coeff(P(3, 2, 1), P(2, 1), P(2, 1)) == 2
    assert lr_coeff(P(4, 2), P(2, 1), P(2, 1)) == 1
    assert lr_coeff(P(2, 2, 1, 1), P(2, 1), P(2, 1)) == 1


def test_grading_and_containment():
    assert lr_coeff(P(2), P(2, 1), P(1)) == 0
    assert lr_coeff(P(1, 1, 1, 1), P(2, 1), P(1)) == 0


def test_schur_polynomial_dimensions():
    # number of SSYT with entries in {1..n}: s_(1,1)(x1..x3) has C(3,2) terms
    poly = schur_polynomial(P(1, 1), 3)
    assert sum(poly.values()) == 3
    poly = schur_polynomial(P(2), 3)
    assert sum(poly.values()) == 6


def test_oracle_agreement_small():
    for mu in partitions_up_to(3):
        for kappa in partitions_up_to(3):
            total = mu.size + kappa.size
            expansion = schur_product_oracle(mu, kappa, max(total, 1))
            for lam in partitions_up_to(total):
                if lam.size == total:
                    assert lr_coeff(lam, mu, kappa) == expansion.get(lam, 0)


def test_oracle_expansion_example():
    expansion = schur_product_oracle(P(1), P(1), 2)
    assert expansion == {P(2): 1, P(1, 1): 1}


def test_symmetry():
    for mu in partitions_up_to(3):
        for kappa in partitions_up_to(3):
            for lam in partitions_up_to(mu.size + kappa.size):
                assert lr_coeff(lam, mu, kappa) == lr_coeff(lam, kappa, mu)


def test_b_entry():
    one = Bipartition.of((1,), (1,))
    vac = Bipartition.of((), ())
    assert B_entry(one, vac) == 1
    assert B_entry(one, one) == 1
    assert B_entry(vac, one) == 0
    # unequal black/white deficits force zero
    assert B_entry(Bipartition.of((2,), (1,)), Bipartition.of((1,), (1,))) == 0
    lam = Bipartition.of((2, 1), (2, 1))
    assert B_entry(lam, one) == 2


def test_b_matrix_unitriangular():
    b = B_matrix(4)
    assert b.is_unitriangular()
    for (lam, mu), v in b.entries.items():
        assert v > 0
        assert lam.size - mu.size == (lam.black.size - mu.black.size) * 2
