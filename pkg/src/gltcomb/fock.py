"""Fock-space style modules over sl_Z: tautological, plain, twisted/shifted
duals, the bipartition tensor module, and finite wedge truncations.

Vectors are finite integer combinations stored as dicts from basis keys to
coefficients; the operators are globally defined, so no truncation cutoff
enters the action itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .partitions import Bipartition, Partition, n_weight

BasisKey = Union[Partition, Bipartition, int, tuple]
Vector = dict


@dataclass(frozen=True)
class Mode:
    """Which module the generators act on."""

    kind: str  # plain | twisted | shifted | tensor | taut | wedge
    t: Optional[int] = None
    n: Optional[int] = None

    @staticmethod
    def plain() -> "Mode":
        return Mode("plain")

    @staticmethod
    def twisted_dual() -> "Mode":
        return Mode("twisted")

    @staticmethod
    def shifted_dual(t: int) -> "Mode":
        return Mode("shifted", t=t)

    @staticmethod
    def tensor(t: int) -> "Mode":
        return Mode("tensor", t=t)

    @staticmethod
    def tautological() -> "Mode":
        return Mode("taut")

    @staticmethod
    def wedge(n: int) -> "Mode":
        return Mode("wedge", n=n)


def _add_into(vec: Vector, key: BasisKey, coeff: int) -> None:
    acc = vec.get(key, 0) + coeff
    if acc:
        vec[key] = acc
    else:
        vec.pop(key, None)


def _check_key(mode: Mode, key: BasisKey) -> None:
    if mode.kind in ("plain", "twisted", "shifted"):
        ok = isinstance(key, Partition)
    elif mode.kind == "tensor":
        ok = isinstance(key, Bipartition)
    elif mode.kind == "taut":
        ok = isinstance(key, int) and not isinstance(key, bool)
    elif mode.kind == "wedge":
        ok = (
            isinstance(key, tuple)
            and len(key) == mode.n
            and all(key[i] > key[i + 1] for i in range(len(key) - 1))
        )
    else:
        raise ValueError(f"unknown mode {mode.kind!r}")
    if not ok:
        raise TypeError(f"basis key {key!r} does not belong to mode {mode.kind!r}")


def _apply_basis(gen: str, a: int, mode: Mode, key: BasisKey, out: Vector, coeff: int) -> None:
    if mode.kind == "plain":
        nu = key.add_box(a) if gen == "f" else key.remove_box(a)
        if nu is not None:
            _add_into(out, nu, coeff)
    elif mode.kind == "twisted":
        nu = key.remove_box(-a) if gen == "f" else key.add_box(-a)
        if nu is not None:
            _add_into(out, nu, coeff)
    elif mode.kind == "shifted":
        c = -(a + mode.t)
        nu = key.remove_box(c) if gen == "f" else key.add_box(c)
        if nu is not None:
            _add_into(out, nu, coeff)
    elif mode.kind == "tensor":
        black = key.black.add_box(a) if gen == "f" else key.black.remove_box(a)
        if black is not None:
            _add_into(out, Bipartition(black, key.white), coeff)
        c = -(a + mode.t)
        white = key.white.remove_box(c) if gen == "f" else key.white.add_box(c)
        if white is not None:
            _add_into(out, Bipartition(key.black, white), coeff)
    elif mode.kind == "taut":
        if gen == "f" and key == a:
            _add_into(out, a + 1, coeff)
        elif gen == "e" and key == a + 1:
            _add_into(out, a, coeff)
    elif mode.kind == "wedge":
        src, dst = (a, a + 1) if gen == "f" else (a + 1, a)
        if src in key and dst not in key:
            # in-place replacement keeps strict decrease, so no sign arises
            new = tuple(dst if v == src else v for v in key)
            _add_into(out, new, coeff)


def apply_generator(gen: str, a: int, mode: Mode, vec: Vector) -> Vector:
    """Linear extension of the generator action f_a or e_a."""
    if gen not in ("f", "e"):
        raise ValueError(f"generator must be 'f' or 'e', got {gen!r}")
    out: Vector = {}
    for key, coeff in vec.items():
        _check_key(mode, key)
        _apply_basis(gen, a, mode, key, out, coeff)
    return out


def h_eigenvalue(a: int, mode: Mode, key: BasisKey) -> int:
    """Diagonal eigenvalue of h_a on a basis vector, per module."""
    if mode.kind == "plain":
        return n_weight(key, a)
    if mode.kind == "twisted":
        return -n_weight(key, -a)
    if mode.kind == "shifted":
        return -n_weight(key, -(a + mode.t))
    if mode.kind == "tensor":
        return n_weight(key.black, a) - n_weight(key.white, -(a + mode.t))
    if mode.kind == "taut":
        return (1 if key == a else 0) - (1 if key == a + 1 else 0)
    if mode.kind == "wedge":
        return sum(1 for v in key if v == a) - sum(1 for v in key if v == a + 1)
    raise ValueError(f"unknown mode {mode.kind!r}")


def apply_h(a: int, mode: Mode, vec: Vector) -> Vector:
    out: Vector = {}
    for key, coeff in vec.items():
        _check_key(mode, key)
        _add_into(out, key, coeff * h_eigenvalue(a, mode, key))
    return out


def commutator_defect(a: int, b: int, mode: Mode, vec: Vector) -> Vector:
    """(e_a f_b - f_b e_a)(v) minus delta_ab h_a(v); zero when the sl_Z
    relations hold."""
    ef = apply_generator("e", a, mode, apply_generator("f", b, mode, vec))
    fe = apply_generator("f", b, mode, apply_generator("e", a, mode, vec))
    out = dict(ef)
    for key, coeff in fe.items():
        _add_into(out, key, -coeff)
    if a == b:
        for key, coeff in apply_h(a, mode, vec).items():
            _add_into(out, key, -coeff)
    return out


def omega(nu: Partition) -> dict[int, int]:
    """The fundamental-weight expansion of the weight of v_nu."""
    out = {}
    for a in nu.addable_contents():
        out[a] = 1
    for a in nu.removable_contents():
        out[a] = -1
    return out


def dominance_leq(lam: Bipartition, mu: Bipartition, t: int) -> bool:
    """Whether lam <= mu: the signed corner-weight identity holds and the
    black partial sums of lam dominate those of mu."""
    support = set()
    for nu in (lam.black, mu.black):
        support.update(nu.addable_contents())
        support.update(nu.removable_contents())
    for nu in (lam.white, mu.white):
        support.update(-(a + t) for a in nu.addable_contents())
        support.update(-(a + t) for a in nu.removable_contents())
    for a in support:
        left = n_weight(lam.black, a) - n_weight(lam.white, -(a + t))
        right = n_weight(mu.black, a) - n_weight(mu.white, -(a + t))
        if left != right:
            return False
    rows = max(lam.black.length, mu.black.length)
    acc_l = acc_m = 0
    for i in range(1, rows + 1):
        acc_l += lam.black.row(i)
        acc_m += mu.black.row(i)
        if acc_l < acc_m:
            return False
    return True


def partition_to_sequence(nu: Partition, n: int) -> tuple[int, ...]:
    """The first n entries of (nu_1, nu_2 - 1, nu_3 - 2, ...)."""
    return tuple(nu.row(i) - (i - 1) for i in range(1, n + 1))


def sequence_to_partition(seq: tuple[int, ...]) -> Optional[Partition]:
    """Inverse of partition_to_sequence when the tail is vacuum; None if the
    implied rows are not a partition."""
    rows = [v + i for i, v in enumerate(seq)]
    while rows and rows[-1] == 0:
        rows.pop()
    if any(r < 0 for r in rows) or any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        return None
    if rows and rows[-1] == 0:
        return None
    return Partition(tuple(rows))


def energy(arg) -> Optional[int]:
    """Energy of a wedge basis sequence, or |nu| on the partition basis.
    Returns None for sequences outside every filtration piece."""
    if isinstance(arg, Partition):
        return arg.size
    total = 0
    for s, entry in enumerate(arg):
        term = entry + s
        if term < 0:
            return None
        total += term
    return total


def pi_n(vec: Vector, n: int) -> Vector:
    """Truncate each partition basis vector to its length-n wedge."""
    if n < 1:
        raise ValueError("wedge length must be at least 1")
    out: Vector = {}
    for nu, coeff in vec.items():
        _check_key(Mode.plain(), nu)
        _add_into(out, partition_to_sequence(nu, n), coeff)
    return out


def phi_n(vec: Vector) -> Vector:
    """Drop the last entry of each wedge basis sequence."""
    out: Vector = {}
    for seq, coeff in vec.items():
        if not isinstance(seq, tuple) or len(seq) < 2:
            raise ValueError("phi needs wedge sequences of length at least 2")
        _add_into(out, seq[:-1], coeff)
    return out


def wedge_basis(n: int, k: int) -> list[tuple[int, ...]]:
    """All length-n strictly decreasing sequences with i_{-s} + s in [0, k]
    and total energy at most k."""
    out: list[tuple[int, ...]] = []

    def rec(s: int, prev: int, used: int, acc: tuple[int, ...]):
        if s == n:
            out.append(acc)
            return
        hi = min(k - s - used, prev - 1 if acc else k)
        for v in range(hi, -s - 1, -1):
            rec(s + 1, v, used + v + s, acc + (v,))

    rec(0, 0, 0, ())
    return out
