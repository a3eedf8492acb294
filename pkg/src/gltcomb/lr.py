"""Littlewood-Richardson coefficients and the tilting-in-tensor matrix B.

lr_coeff enumerates LR skew tableaux directly; schur_product_oracle expands
products of Schur polynomials over exact integers and serves as an
independent check.
"""

from __future__ import annotations

from functools import lru_cache

from .matrices import BipartitionMatrix
from .partitions import Bipartition, Partition, bipartitions_up_to, partitions_of


def lr_coeff(lam: Partition, mu: Partition, kappa: Partition) -> int:
    """Multiplicity of s_lam in s_mu * s_kappa: the number of LR skew tableaux
    of shape lam/mu and weight kappa."""
    if lam.size != mu.size + kappa.size or not lam.contains(mu):
        return 0
    if kappa.size == 0:
        return 1 if lam == mu else 0
    rows = lam.length
    cells = []  # reverse reading order: rows top to bottom, right to left
    for i in range(1, rows + 1):
        for j in range(lam.row(i), mu.row(i), -1):
            cells.append((i, j))
    weight_cap = list(kappa.rows)
    n_colors = len(weight_cap)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * n_colors

    def feasible(cell: tuple[int, int], v: int) -> bool:
        i, j = cell
        if v > i:  # entries in row i of an LR tableau never exceed i
            return False
        right = filling.get((i, j + 1))  # filled earlier in reverse reading order
        if right is not None and v > right:  # weakly increasing along rows
            return False
        up = filling.get((i - 1, j))
        if up is not None and up >= v:  # strictly increasing down columns
            return False
        if counts[v - 1] >= weight_cap[v - 1]:
            return False
        if v > 1 and counts[v - 1] >= counts[v - 2]:  # lattice word condition
            return False
        return True

    def backtrack(k: int) -> int:
        if k == len(cells):
            return 1
        total = 0
        cell = cells[k]
        for v in range(1, n_colors + 1):
            if feasible(cell, v):
                filling[cell] = v
                counts[v - 1] += 1
                total += backtrack(k + 1)
                counts[v - 1] -= 1
                del filling[cell]
        return total

    # Entries in row i come from the cap min(i, n_colors); cells right of the
    # inner shape in row 1 must all be 1, handled by the generic pruning.
    return backtrack(0)


Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def schur_polynomial(nu: Partition, nvars: int) -> dict[Monomial, int]:
    """The Schur polynomial of nu in nvars variables as a sum over
    semistandard tableaux; exponent vectors map to integer coefficients."""
    if nu.length > nvars:
        return {}
    if nu.size == 0:
        return {(0,) * nvars: 1}
    poly: dict[Monomial, int] = {}
    cols = nu.transpose().rows

    # Fill column by column (strictly increasing down a column, weakly
    # increasing along rows) tracking only the previous column.
    def fill_columns(c: int, prev: tuple[int, ...], expo: tuple[int, ...]):
        if c == len(cols):
            poly[expo] = poly.get(expo, 0) + 1
            return
        height = cols[c]

        def fill_cells(i: int, last: int, acc: tuple[int, ...]):
            if i == height:
                fill_columns(c + 1, acc, _bump(expo, acc))
                return
            lo = max(last + 1, 1)
            if i < len(prev):
                lo = max(lo, prev[i])
            for v in range(lo, nvars + 1):
                fill_cells(i + 1, v, acc + (v,))

        fill_cells(0, 0, ())

    def _bump(expo: tuple[int, ...], column: tuple[int, ...]) -> tuple[int, ...]:
        e = list(expo)
        for v in column:
            e[v - 1] += 1
        return tuple(e)

    fill_columns(0, (), (0,) * nvars)
    return poly


def _poly_mul(p: dict[Monomial, int], q: dict[Monomial, int]) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            key = tuple(a + b for a, b in zip(m1, m2))
            acc = out.get(key, 0) + c1 * c2
            if acc:
                out[key] = acc
            else:
                del out[key]
    return out


def schur_product_oracle(mu: Partition, kappa: Partition, nvars: int) -> dict[Partition, int]:
    """Expand s_mu * s_kappa into Schur polynomials by iterated
    leading-monomial subtraction in nvars variables."""
    if nvars < mu.size + kappa.size:
        raise ValueError(f"need at least {mu.size + kappa.size} variables, got {nvars}")
    product = _poly_mul(schur_polynomial(mu, nvars), schur_polynomial(kappa, nvars))
    result: dict[Partition, int] = {}
    while product:
        lead = max(product)
        coeff = product[lead]
        shape = Partition.of(*lead)
        if tuple(shape.rows) + (0,) * (nvars - shape.length) != lead:
            raise AssertionError(f"leading monomial {lead} is not a partition")
        result[shape] = coeff
        for mono, c in schur_polynomial(shape, nvars).items():
            acc = product.get(mono, 0) - coeff * c
            if acc:
                product[mono] = acc
            else:
                product.pop(mono, None)
    return result


def B_entry(lam: Bipartition, mu: Bipartition) -> int:
    """Sum over kappa of lr(black lam; black mu, kappa) * lr(white lam; white mu, kappa)."""
    d_black = lam.black.size - mu.black.size
    d_white = lam.white.size - mu.white.size
    if d_black != d_white or d_black < 0:
        return 0
    return sum(
        lr_coeff(lam.black, mu.black, kappa) * lr_coeff(lam.white, mu.white, kappa)
        for kappa in partitions_of(d_black)
    )


@lru_cache(maxsize=None)
def B_matrix(n: int) -> BipartitionMatrix:
    """Tilting multiplicities of the formal-parameter mixed tensor objects."""
    m = BipartitionMatrix(n)
    index = bipartitions_up_to(n)
    for lam in index:
        for mu in index:
            v = B_entry(lam, mu)
            if v:
                m.entries[(lam, mu)] = v
    return m
