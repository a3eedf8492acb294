"""Weight diagrams of both families, their cores and stable windows.

A weight diagram labels every integer with one of the symbols
'x' (cross), '>' , '<', 'o' (circle).  The d-family is built from the sets
C = {black_i + t - i} and D = {white_i - i}; the dprime-family from
C' = {black_i + t - i} and D' = Z minus {i - white_i - 1}.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Union

from .partitions import Bipartition, Partition

GENERIC = "generic"
ParamT = Union[int, str]

CROSS = "x"
GT = ">"
LT = "<"
CIRC = "o"

FAMILY_D = "d"
FAMILY_DPRIME = "dprime"


def is_generic(t: ParamT) -> bool:
    if t == GENERIC:
        return True
    if isinstance(t, int) and not isinstance(t, bool):
        return False
    raise ValueError(f"parameter t must be an integer or {GENERIC!r}, got {t!r}")


def _in_c_track(black: Partition, t: int, s: int) -> bool:
    """Membership of s in {black_i + t - i : i >= 1} for integer t."""
    if s <= t - black.length - 1:
        return True
    return any(black.rows[i - 1] + t - i == s for i in range(1, black.length + 1))


def _in_d_set(white: Partition, s: int) -> bool:
    """Membership of s in {white_i - i : i >= 1}."""
    if s <= -white.length - 1:
        return True
    return any(white.rows[i - 1] - i == s for i in range(1, white.length + 1))


def _in_dprime_set(white: Partition, s: int) -> bool:
    """Membership of s in Z minus {i - white_i - 1 : i >= 1}."""
    if s >= white.length:
        return False
    return all(i - white.row(i) - 1 != s for i in range(1, white.length + 1))


def symbol_at(lam: Bipartition, t: ParamT, family: str, s: int) -> str:
    """The symbol of the weight diagram of lam at integer position s."""
    if family not in (FAMILY_D, FAMILY_DPRIME):
        raise ValueError(f"unknown diagram family {family!r}")
    # For generic t the C-track lives off the integer lattice.
    in_c = False if is_generic(t) else _in_c_track(lam.black, t, s)
    if family == FAMILY_D:
        in_d = _in_d_set(lam.white, s)
    else:
        in_d = _in_dprime_set(lam.white, s)
    if in_c and in_d:
        return CROSS
    if in_c:
        return GT
    if in_d:
        return LT
    return CIRC


def stable_window(lam: Bipartition, t: int, family: str) -> tuple[int, int]:
    """An interval [L, R] outside of which the diagram equals its tails."""
    if is_generic(t):
        raise ValueError("stable windows are defined for integer t only")
    lb, lw = lam.black, lam.white
    if family == FAMILY_D:
        left = min(t - lb.length, -lw.length) - 1
        right = max(lb.row(1) + t, lw.row(1), 0)
    elif family == FAMILY_DPRIME:
        left = min(t - lb.length, -lw.row(1), 0) - 1
        right = max(lb.row(1) + t, lw.length, 0)
    else:
        raise ValueError(f"unknown diagram family {family!r}")
    return (left, right)


@dataclass(frozen=True)
class WeightDiagram:
    """A weight diagram with a finite active window and stable tails."""

    source: Bipartition
    t: ParamT
    family: str
    window: tuple[int, int]
    symbols: str
    cored: bool = False

    def symbol(self, s: int) -> str:
        left, right = self.window
        if left <= s <= right:
            sym = self.symbols[s - left]
        elif is_generic(self.t):
            sym = symbol_at(self.source, self.t, self.family, s)
        elif s < left:
            sym = CROSS
        else:
            sym = CIRC
        if self.cored and sym == CROSS:
            return CIRC
        return sym

    def cross_positions(self, left: int, right: int) -> frozenset[int]:
        """All cross positions in [left, right] (tails included)."""
        return frozenset(s for s in range(left, right + 1) if self.symbol(s) == CROSS)

    def render(self) -> str:
        """Symbols over position labels, one column per position."""
        left, right = self.window
        cells = [(self.symbol(s), str(s)) for s in range(left, right + 1)]
        width = [max(len(a), len(b)) for a, b in cells]
        top = "  ".join(a.rjust(w) for (a, _), w in zip(cells, width))
        bot = "  ".join(b.rjust(w) for (_, b), w in zip(cells, width))
        return top + "\n" + bot

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "family": self.family,
            "window": list(self.window),
            "symbols": "".join(self.symbol(s) for s in range(self.window[0], self.window[1] + 1)),
        }


@lru_cache(maxsize=None)
def build_diagram(lam: Bipartition, t: ParamT, family: str) -> WeightDiagram:
    """The weight diagram of lam, windowed to its stable region."""
    if is_generic(t):
        window = _generic_window(lam, family)
    else:
        window = stable_window(lam, t, family)
    left, right = window
    symbols = "".join(symbol_at(lam, t, family, s) for s in range(left, right + 1))
    return WeightDiagram(lam, t, family, window, symbols)


def _generic_window(lam: Bipartition, family: str) -> tuple[int, int]:
    # Only the D-type set contributes symbols at integer positions; pick a
    # window past which the '<' tail (d-family) or 'o' tail is uniform.
    lw = lam.white
    if family == FAMILY_D:
        return (-lw.length - 1, max(lw.row(1), 0))
    return (min(-lw.row(1), 0) - 1, max(lw.length, 0))


def core_of(d: WeightDiagram) -> WeightDiagram:
    """Replace every cross with a circle; idempotent."""
    cored_symbols = d.symbols.replace(CROSS, CIRC)
    return replace(d, symbols=cored_symbols, cored=True)


def same_core(lam: Bipartition, mu: Bipartition, t: ParamT, family: str = FAMILY_DPRIME) -> bool:
    """Whether the cores of the two weight diagrams agree at every integer."""
    if is_generic(t):
        # The off-lattice C-track carries '>' symbols at positions t + (black_i - i);
        # equal cores force equal black beta-sets, i.e. equal black partitions.
        if lam.black != mu.black:
            return False
        dl = build_diagram(lam, t, family)
        dm = build_diagram(mu, t, family)
        left = min(dl.window[0], dm.window[0])
        right = max(dl.window[1], dm.window[1])
    else:
        dl = build_diagram(lam, t, family)
        dm = build_diagram(mu, t, family)
        left = min(dl.window[0], dm.window[0])
        right = max(dl.window[1], dm.window[1])
    cl, cm = core_of(dl), core_of(dm)
    return all(cl.symbol(s) == cm.symbol(s) for s in range(left, right + 1))


def diagram_to_bipartition(symbols: dict[int, str], t: int, family: str = FAMILY_DPRIME) -> Bipartition:
    """Recover the bipartition from diagram symbols on a window covering the
    active region (left tail all crosses, right tail all circles assumed)."""
    if is_generic(t):
        raise ValueError("diagram inversion requires integer t")
    positions = sorted(symbols)
    left, right = positions[0], positions[-1]
    c_vals = [s for s in positions if symbols[s] in (CROSS, GT)]
    # Left tail: every position below the window is a cross, hence in both sets.
    black_rows = []
    for i, c in enumerate(sorted(c_vals, reverse=True), start=1):
        black_rows.append(c - t + i)
    pad = len(black_rows) + 1
    for j in range(1, pad + 1):
        black_rows.append((left - j) - t + len(c_vals) + j)
    black = _rows_to_partition(black_rows, "black")
    if family == FAMILY_D:
        d_vals = [s for s in positions if symbols[s] in (CROSS, LT)]
        white_rows = [d + i for i, d in enumerate(sorted(d_vals, reverse=True), start=1)]
        for j in range(1, pad + 1):
            white_rows.append((left - j) + len(d_vals) + j)
        white = _rows_to_partition(white_rows, "white")
    else:
        # Complement of D': circles and '>' in the window plus everything above it.
        m_vals = [s for s in positions if symbols[s] in (CIRC, GT)]
        white_rows = [i - m - 1 for i, m in enumerate(sorted(m_vals), start=1)]
        n_in = len(m_vals)
        for j in range(1, pad + 1):
            white_rows.append((n_in + j) - (right + j) - 1)
        white = _rows_to_partition(white_rows, "white")
    return Bipartition(black, white)


def _rows_to_partition(rows: list[int], side: str) -> Partition:
    while rows and rows[-1] == 0:
        rows.pop()
    if any(r <= 0 for r in rows) or any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError(f"symbols do not encode a valid {side} partition: {rows}")
    return Partition(tuple(rows))
