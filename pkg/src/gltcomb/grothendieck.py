"""Grothendieck-level matrix algebra: translation matrices on the standard
and tilting bases, mixed-tensor decompositions, Hom dimensions and the
eigenvalue labels of the content operator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .caps import D_inverse, D_matrix, mult_D
from .diagrams import ParamT, is_generic
from .lr import B_matrix
from .matrices import BipartitionMatrix
from .partitions import Bipartition, bipartitions_up_to

INTEGER_FAMILY = "integer"
SHIFTED_FAMILY = "shifted"


def _white_shift(a: int, t: ParamT, family: Optional[str]) -> Optional[int]:
    """Content selector for the white move, or None when that track is off."""
    if not is_generic(t):
        return -(a + t)
    if family == INTEGER_FAMILY:
        return None
    if family == SHIFTED_FAMILY:
        return -a
    raise ValueError("generic t needs family 'integer' or 'shifted'")


def _black_on(t: ParamT, family: Optional[str]) -> bool:
    if not is_generic(t):
        return True
    if family == INTEGER_FAMILY:
        return True
    if family == SHIFTED_FAMILY:
        return False
    raise ValueError("generic t needs family 'integer' or 'shifted'")


def a_tilde(a: int, t: ParamT, n: int, family: Optional[str] = None) -> BipartitionMatrix:
    """Translation matrix on the standard basis: (lam, mu) entry 1 iff mu is
    lam plus a black content-a box or lam minus a white content -(a+t) box."""
    m = BipartitionMatrix(n)
    white_c = _white_shift(a, t, family)
    black_on = _black_on(t, family)
    for lam in bipartitions_up_to(n):
        if black_on:
            black = lam.black.add_box(a)
            if black is not None and lam.size + 1 <= n:
                m.entries[(lam, Bipartition(black, lam.white))] = 1
        if white_c is not None:
            white = lam.white.remove_box(white_c)
            if white is not None:
                m.entries[(lam, Bipartition(lam.black, white))] = 1
    return m


def e_tilde(a: int, t: ParamT, n: int, family: Optional[str] = None) -> BipartitionMatrix:
    """(lam, mu) entry 1 iff mu is lam minus a black content-a box or lam plus
    a white content -(a+t) box."""
    m = BipartitionMatrix(n)
    white_c = _white_shift(a, t, family)
    black_on = _black_on(t, family)
    for lam in bipartitions_up_to(n):
        if black_on:
            black = lam.black.remove_box(a)
            if black is not None:
                m.entries[(lam, Bipartition(black, lam.white))] = 1
        if white_c is not None:
            white = lam.white.add_box(white_c)
            if white is not None and lam.size + 1 <= n:
                m.entries[(lam, Bipartition(lam.black, white))] = 1
    return m


class InternalInconsistencyError(RuntimeError):
    """A derived multiplicity came out negative."""


def a_matrix(a: int, t: ParamT, n: int, family: Optional[str] = None) -> BipartitionMatrix:
    """Translation matrix on the tilting basis, conjugated through the lift
    multiplicities; computed at truncation n+1 and restricted."""
    if is_generic(t):
        return a_tilde(a, t, n, family)
    d = D_matrix(t, n + 1)
    d_inv = D_inverse(t, n + 1)
    product = d.mul(a_tilde(a, t, n + 1)).mul(d_inv).restrict(n)
    for (lam, mu), v in product.entries.items():
        if v < 0:
            raise InternalInconsistencyError(
                f"negative tilting multiplicity {v} at ({lam}, {mu}), a={a}, t={t}"
            )
    return product


def b_matrix(t: ParamT, n: int) -> BipartitionMatrix:
    """Multiplicities of indecomposable tiltings in the mixed Schur-functor
    tensor objects: B times the inverse of the lift-multiplicity matrix."""
    b = B_matrix(n)
    if not is_generic(t):
        b = b.mul(D_inverse(t, n))
    for (lam, mu), v in b.entries.items():
        if v < 0:
            raise InternalInconsistencyError(
                f"negative tilting multiplicity {v} at ({lam}, {mu}), t={t}"
            )
    return b


def hom_dim(lam: Bipartition, mu: Bipartition, t: ParamT) -> int:
    """dim Hom between the tiltings of lam and mu: paired standard multiplicities."""
    bound = min(lam.size, mu.size)
    return sum(
        mult_D(lam, nu, t) * mult_D(mu, nu, t) for nu in bipartitions_up_to(bound)
    )


@dataclass(frozen=True)
class EigenLabel:
    """Content-operator eigenvalue: either the integer c, or c - t (formal in t)."""

    kind: str  # "int" | "shifted"
    c: int

    def value(self, t: int) -> int:
        return self.c if self.kind == "int" else self.c - t

    def to_json(self) -> dict:
        return {"kind": self.kind, "c": self.c}


def x_eigenvalue(lam: Bipartition, mu: Bipartition, t: ParamT) -> Optional[EigenLabel]:
    """Eigenvalue label of the content operator on the connection lam -> mu,
    absent when mu is not a single black addition or white removal."""
    if mu.white == lam.white and mu.black.size == lam.black.size + 1 and mu.black.contains(lam.black):
        for c in lam.black.addable_contents():
            if lam.black.add_box(c) == mu.black:
                return EigenLabel("int", c)
    if mu.black == lam.black and mu.white.size == lam.white.size - 1 and lam.white.contains(mu.white):
        for c in lam.white.removable_contents():
            if lam.white.remove_box(c) == mu.white:
                return EigenLabel("shifted", -c)
    return None


def f_on_standard(
    lam: Bipartition, a: int, t: ParamT, family: Optional[str] = None
) -> tuple[Optional[Bipartition], Optional[Bipartition]]:
    """Sub and quotient of the standard filtration of the translated standard
    object: (lam plus black box_a, lam minus white box_{-(a+t)})."""
    sub = quot = None
    if _black_on(t, family):
        black = lam.black.add_box(a)
        if black is not None:
            sub = Bipartition(black, lam.white)
    white_c = _white_shift(a, t, family)
    if white_c is not None:
        white = lam.white.remove_box(white_c)
        if white is not None:
            quot = Bipartition(lam.black, white)
    return (sub, quot)
