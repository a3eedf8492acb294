"""Partitions, bipartitions and the add/remove-box calculus.

Conventions: partitions are stored in canonical form (strictly positive,
weakly decreasing rows); the content of the cell in row i, column j
(both 1-based) is j - i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional


@dataclass(frozen=True, order=True)
class Partition:
    """A partition as a weakly decreasing tuple of positive integers."""

    rows: tuple[int, ...] = ()

    def __post_init__(self):
        for i, r in enumerate(self.rows):
            if r <= 0:
                raise ValueError(f"partition rows must be positive, got {r}")
            if i > 0 and self.rows[i - 1] < r:
                raise ValueError(f"partition rows must be weakly decreasing: {self.rows}")

    @staticmethod
    def of(*rows: int) -> "Partition":
        """Build a partition, dropping trailing zeros."""
        rows = tuple(r for r in rows if r != 0)
        return Partition(rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def length(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> int:
        """The i-th row (1-based), zero beyond the stored rows."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def transpose(self) -> "Partition":
        if not self.rows:
            return Partition()
        cols = [0] * self.rows[0]
        for r in self.rows:
            for j in range(r):
                cols[j] += 1
        return Partition(tuple(cols))

    def contains(self, other: "Partition") -> bool:
        return all(self.row(i + 1) >= r for i, r in enumerate(other.rows))

    def addable_contents(self) -> list[int]:
        """Contents of cells that may be added, in decreasing order."""
        out = []
        for i in range(1, self.length + 2):
            if self.row(i - 1) > self.row(i) or i == 1:
                out.append(self.row(i) + 1 - i)
        return out

    def removable_contents(self) -> list[int]:
        """Contents of corner cells that may be removed, in decreasing order."""
        out = []
        for i in range(1, self.length + 1):
            if self.row(i) > self.row(i + 1):
                out.append(self.row(i) - i)
        return out

    def add_box(self, a: int) -> Optional["Partition"]:
        """The unique partition in nu + box_a, or None."""
        if not isinstance(a, int):
            return None
        for i in range(1, self.length + 2):
            if (i == 1 or self.row(i - 1) > self.row(i)) and self.row(i) + 1 - i == a:
                rows = list(self.rows)
                if i <= len(rows):
                    rows[i - 1] += 1
                else:
                    rows.append(1)
                return Partition(tuple(rows))
        return None

    def remove_box(self, a: int) -> Optional["Partition"]:
        """The unique partition in nu - box_a, or None."""
        if not isinstance(a, int):
            return None
        for i in range(1, self.length + 1):
            if self.row(i) > self.row(i + 1) and self.row(i) - i == a:
                rows = list(self.rows)
                rows[i - 1] -= 1
                if rows[i - 1] == 0:
                    rows.pop()
                return Partition(tuple(rows))
        return None

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells (row, column), 1-based."""
        for i, r in enumerate(self.rows, start=1):
            for j in range(1, r + 1):
                yield (i, j)

    def __str__(self) -> str:
        return "[" + ",".join(str(r) for r in self.rows) + "]"

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse '[3,1]' (whitespace-insensitive; trailing zeros dropped)."""
        text = "".join(text.split())
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"partition must look like '[3,1]', got {text!r}")
        body = text[1:-1]
        if not body:
            return Partition()
        try:
            rows = tuple(int(p) for p in body.split(","))
        except ValueError:
            raise ValueError(f"non-integer row in partition {text!r}") from None
        if any(r < 0 for r in rows):
            raise ValueError(f"negative row in partition {text!r}")
        return Partition.of(*rows)

    def to_json(self) -> list[int]:
        return list(self.rows)


EMPTY = Partition()


def n_weight(nu: Partition, a: int) -> int:
    """The h_a eigenvalue on v_nu: +1 addable, -1 removable, 0 otherwise."""
    if nu.add_box(a) is not None:
        return 1
    if nu.remove_box(a) is not None:
        return -1
    return 0


@dataclass(frozen=True, order=True)
class Bipartition:
    """A pair (black, white) of partitions."""

    black: Partition = EMPTY
    white: Partition = EMPTY

    @staticmethod
    def of(black, white) -> "Bipartition":
        return Bipartition(Partition.of(*black), Partition.of(*white))

    @property
    def size(self) -> int:
        return self.black.size + self.white.size

    def conjugate(self) -> "Bipartition":
        """(black, transpose of white); an involution."""
        return Bipartition(self.black, self.white.transpose())

    def __str__(self) -> str:
        return f"[{self.black},{self.white}]"

    @staticmethod
    def parse(text: str) -> "Bipartition":
        """Parse '[[3,1],[2]]' (black first, whitespace-insensitive)."""
        text = "".join(text.split())
        if not (text.startswith("[[") and text.endswith("]]")):
            raise ValueError(f"bipartition must look like '[[3,1],[2]]', got {text!r}")
        inner = text[1:-1]
        sep = inner.find("],[")
        if sep < 0:
            raise ValueError(f"bipartition must have two parts, got {text!r}")
        return Bipartition(Partition.parse(inner[: sep + 1]), Partition.parse(inner[sep + 2 :]))

    def to_json(self) -> list[list[int]]:
        return [self.black.to_json(), self.white.to_json()]


VACUUM = Bipartition()

BLACK_ADD = "black-add"
BLACK_REMOVE = "black-remove"
WHITE_ADD = "white-add"
WHITE_REMOVE = "white-remove"


def bipartition_neighbors(lam: Bipartition, a, kind: str) -> frozenset[Bipartition]:
    """The set lam +- (black or white) box of content a; empty for non-integer a."""
    if not isinstance(a, int) or isinstance(a, bool):
        return frozenset()
    if kind == BLACK_ADD:
        nu = lam.black.add_box(a)
        return frozenset() if nu is None else frozenset({Bipartition(nu, lam.white)})
    if kind == BLACK_REMOVE:
        nu = lam.black.remove_box(a)
        return frozenset() if nu is None else frozenset({Bipartition(nu, lam.white)})
    if kind == WHITE_ADD:
        nu = lam.white.add_box(a)
        return frozenset() if nu is None else frozenset({Bipartition(lam.black, nu)})
    if kind == WHITE_REMOVE:
        nu = lam.white.remove_box(a)
        return frozenset() if nu is None else frozenset({Bipartition(lam.black, nu)})
    raise ValueError(f"unknown neighbor kind {kind!r}")


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in lexicographically decreasing order."""
    if n < 0:
        return ()

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(rows) for rows in gen(n, n if n else 1))


@lru_cache(maxsize=None)
def partitions_up_to(n: int) -> tuple[Partition, ...]:
    """All partitions of size at most n, by (size, lex)."""
    out: list[Partition] = []
    for k in range(n + 1):
        out.extend(sorted(partitions_of(k), key=lambda p: p.rows))
    return tuple(out)


@lru_cache(maxsize=None)
def bipartitions_up_to(n: int) -> tuple[Bipartition, ...]:
    """All bipartitions of total size at most n, by (size, lex on black then white)."""
    out: list[Bipartition] = []
    for k in range(n + 1):
        layer = [
            Bipartition(b, w)
            for i in range(k + 1)
            for b in partitions_of(i)
            for w in partitions_of(k - i)
        ]
        out.extend(sorted(layer, key=lambda bp: (bp.black.rows, bp.white.rows)))
    return tuple(out)
