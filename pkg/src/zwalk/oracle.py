"""Slow, obviously-correct reference implementations.

Everything here reduces strings by rescanning from the definitions: pick any
Z-shape occurrence, delete its tail, repeat.  Uniqueness of the result
(confluence of the rewriting relation) is what makes these usable as
differential oracles for the fast reducer.  The frontier/originator/stability
routines are the white-box counterpart used to validate the reducer's
internal bookkeeping on small inputs.

None of this is meant to be fast; worst cases are cubic.
"""

from dataclasses import dataclass

import numpy as np

from ._kernels import first_z_kernel, naive_radii_kernel, shortest_z_kernel, z_pairs
from .core import LabeledString, ZOccurrence, find_z_shapes, naive_radii
from .gen import SplitMix64


@dataclass(frozen=True)
class Strategy:
    """Order in which Z-shape occurrences are contracted."""

    kind: str  # "leftmost" | "shortest" | "random"
    seed: int = 0

    @staticmethod
    def leftmost() -> "Strategy":
        return Strategy("leftmost")

    @staticmethod
    def shortest_then_leftmost() -> "Strategy":
        return Strategy("shortest")

    @staticmethod
    def random(seed: int) -> "Strategy":
        return Strategy("random", seed)


def _radii_of(ids: np.ndarray) -> np.ndarray:
    out = np.zeros(ids.shape[0], dtype=np.int32)
    if ids.shape[0]:
        naive_radii_kernel(ids, out)
    return out


def normal_form_naive(w: LabeledString, strategy: Strategy = Strategy("leftmost")) -> LabeledString:
    """Contract Z-shapes in the order given by ``strategy`` until none remain.

    By confluence the result does not depend on the strategy; the strategy
    argument exists so tests can check exactly that.
    """
    cur = np.ascontiguousarray(w.ids, dtype=np.int32)
    rng = SplitMix64(strategy.seed) if strategy.kind == "random" else None
    while cur.shape[0] >= 3:
        radii = _radii_of(cur)
        if strategy.kind == "leftmost":
            p1, p2 = (int(v) for v in first_z_kernel(radii))
        elif strategy.kind == "shortest":
            p1, p2 = (int(v) for v in shortest_z_kernel(radii))
        elif strategy.kind == "random":
            pairs = z_pairs(radii)
            if pairs.shape[0] == 0:
                p1 = p2 = 0
            else:
                row = pairs[rng.next() % pairs.shape[0]]
                p1, p2 = int(row[0]), int(row[1])
        else:
            raise ValueError(f"unknown strategy kind {strategy.kind!r}")
        if p1 == 0:
            break
        s = p2 - p1
        cur = np.concatenate((cur[:p1], cur[p2 + s :]))
    return LabeledString(cur, w.alphabet)


def check_confluence(w: LabeledString, strategies: list[Strategy]) -> bool:
    """True iff all strategies reach the same irreducible string."""
    if len(strategies) < 2:
        raise ValueError("need at least two strategies to compare")
    forms = [normal_form_naive(w, st) for st in strategies]
    return all(f == forms[0] for f in forms[1:])


# ---------------------------------------------------------------------------
# palindrome chains, frontiers and stability


def _require_pp_irreducible(w: LabeledString) -> None:
    if len(w) > 1 and find_z_shapes(w[: len(w) - 1]):
        raise ValueError("string has a reducible proper prefix")


def chain_step_ok(radii: np.ndarray, c: int, d: int) -> bool:
    """Whether ``c`` is chained to ``d``: c <= d-rho(d) <= d <= c+rho(c) <= d+rho(d)."""
    rc = int(radii[c - 1])
    rd = int(radii[d - 1])
    return c <= d - rd and d <= c + rc and c + rc <= d + rd and c < d


def frontier_table(radii: np.ndarray) -> list[int]:
    """Maximum frontier for every position, by right-to-left DP over the
    chain relation.  Entry ``i`` is position ``i+1``."""
    n = int(radii.shape[0])
    table = [0] * n
    for c in range(n, 0, -1):
        rc = int(radii[c - 1])
        best = c + rc
        for d in range(c + 1, c + rc + 1):
            if chain_step_ok(radii, c, d) and table[d - 1] > best:
                best = table[d - 1]
        table[c - 1] = best
    return table


def frontier_naive(w: LabeledString, c: int) -> int:
    """Maximum frontier reachable by palindrome chains from ``c``."""
    _require_pp_irreducible(w)
    if not 1 <= c <= len(w):
        raise ValueError(f"position {c} out of range 1..{len(w)}")
    return frontier_table(naive_radii(w))[c - 1]


def originator_naive(w: LabeledString, d: int) -> int:
    """Smallest position whose frontier covers ``d``."""
    _require_pp_irreducible(w)
    if not 1 <= d <= len(w):
        raise ValueError(f"position {d} out of range 1..{len(w)}")
    table = frontier_table(naive_radii(w))
    for c in range(1, d + 1):
        if table[c - 1] >= d:
            return c
    return d  # c = d always qualifies since the frontier is >= d


def is_stable_naive(w: LabeledString, c: int) -> bool:
    """A position is stable when its frontier stops short of the string end."""
    return frontier_naive(w, c) < len(w)
