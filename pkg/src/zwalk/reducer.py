"""Linear-time online Z-reducer.

Two implementations of the same algorithm live here:

* :func:`reduce` / :func:`reduce_with_stats` run the batch kernel from
  :mod:`zwalk._kernels` over a whole input array; this is the fast path.
* :class:`Reducer` is a letter-at-a-time state machine with ``feed`` /
  ``finish`` / ``current``.  The algorithm pulls letters from deep inside
  its extension loop, so the machine keeps an explicit continuation stack of
  stabilization frames and suspends whenever the next letter is required.

Both produce identical outputs, operation counters and contraction traces;
the test suite holds them against each other and against the brute-force
oracle.

The working string is kept pp-irreducible throughout: after every processed
letter it equals the unique irreducible form of the input consumed so far.
Radii bookkeeping is deliberately sloppy in a controlled way ("adaptive"
mirrored values that may differ from the true radius yet still witness every
Z-shape inside the enclosing palindrome's arm); exact values are restored
right-to-left only once a position's frontier is known to stop short of the
string end.  That is what makes the whole run linear instead of the
n-log-n of rescanning.
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import numpy as np

from . import _kernels
from ._kernels import FIRST_USER_ID, SENT_L, SENT_R
from .core import Alphabet, LabeledString
from .oracle import frontier_table

__all__ = [
    "Counters",
    "ContractionEvent",
    "Reducer",
    "DebugValidationError",
    "reduce",
    "reduce_with_stats",
]


@dataclass
class Counters:
    """Operation counts; every one of these is O(input length)."""

    comparisons: int = 0
    appends: int = 0
    stack_pushes: int = 0
    stabilize_calls: int = 0
    contractions: int = 0


class ContractionEvent(NamedTuple):
    """One tail deletion, in sentinel-free coordinates of the working string.

    Replaying the events against the raw input (append letters up to
    ``consumed_prefix_length``, then delete the suffix Z-shape whose right
    pivot is ``pivot_right``) reproduces the reducer's output.
    """

    pivot_right: int
    tail_length: int
    consumed_prefix_length: int


class DebugValidationError(AssertionError):
    """An internal invariant failed while running in debug-validation mode."""


# stabilization frame states
_S_SLOW_NEW = 0
_S_SLOW_CMP = 1
_S_FOR = 2
_S_RET = 3

_DEBUG_CAP = 514  # sentinel-inclusive length limit for oracle revalidation


class Reducer:
    """Single-owner online reducer; not shareable while accepting letters."""

    __slots__ = (
        "counters",
        "trace",
        "alphabet",
        "_w",
        "_pals",
        "_stack",
        "_frames",
        "_phase",
        "_want_inner",
        "_raw_consumed",
        "_debug",
        "_mirror_pending",
        "_root_was_false",
        "_journal",
    )

    def __init__(
        self,
        alphabet: Optional[Alphabet] = None,
        debug_validate: bool = False,
        journal: Optional[list] = None,
    ):
        self.counters = Counters()
        self.trace: list[ContractionEvent] = []
        self.alphabet = alphabet if alphabet is not None else Alphabet()
        self._w = [-1, SENT_L]  # 1-based working string; slot 0 is dead
        self._pals = [0, 0]
        self._stack: list[int] = []
        self._frames: list[list[int]] = []  # [c, b, d, state, r]
        self._phase = "accepting"
        self._want_inner = False
        self._raw_consumed = 0
        self._debug = debug_validate
        self._mirror_pending = False
        self._root_was_false = True
        self._journal = journal
        self.counters.appends = 1  # the left sentinel

    # -- public surface ----------------------------------------------------

    @property
    def phase(self) -> str:
        return self._phase

    def feed(self, symbol: int) -> None:
        """Consume one letter and run all control flow that does not need
        further letters."""
        if self._phase != "accepting":
            raise RuntimeError("feed() after finish()")
        sym = int(symbol)
        if sym < FIRST_USER_ID:
            raise ValueError(f"symbol id {sym} is a reserved sentinel")
        self._append(sym, raw=True)
        self._dispatch()

    def feed_all(self, symbols: Iterable[int]) -> None:
        for sym in symbols:
            self.feed(sym)

    def finish(self) -> LabeledString:
        """Inject the terminal sentinel, run to completion, return the
        normal form."""
        if self._phase != "accepting":
            raise RuntimeError("finish() called twice")
        self._append(SENT_R, raw=False)
        self._dispatch()
        if self._want_inner or self._frames:  # pragma: no cover
            raise RuntimeError("reducer still awaiting input after the end sentinel")
        self._phase = "finished"
        return LabeledString(self._w[2 : len(self._w) - 1], self.alphabet)

    def current(self) -> LabeledString:
        """Sentinel-stripped working string as of the last fed letter."""
        return LabeledString(self._w[2:], self.alphabet)

    # -- machine internals ---------------------------------------------------

    def _append(self, sym: int, raw: bool) -> None:
        self._w.append(sym)
        self._pals.append(0)
        self.counters.appends += 1
        if raw:
            self._raw_consumed += 1

    def _dispatch(self) -> None:
        if self._want_inner:
            # the letter satisfies a pull from inside a stabilization frame
            self._want_inner = False
            if self._mirror_pending:
                self._mirror_pending = False
                self._check_mirror()
            self._run()
        else:
            # the letter lands in the main loop: stabilize the new suffix
            self._stack.clear()
            wlen = len(self._w) - 1
            self._frames.append([wlen - 1, wlen, 0, _S_SLOW_NEW, 0])
            self.counters.stabilize_calls += 1
            if self._journal is not None:
                self._journal.append(("stab", wlen - 1))
            self._run()

    def _request_letter(self) -> None:
        self._want_inner = True

    def _run(self) -> None:
        w, pals, stack, frames = self._w, self._pals, self._stack, self._frames
        counters = self.counters
        journal = self._journal
        pending = 0  # 0: run top frame, 1: child returned false, 2: returned true
        while frames:
            f = frames[-1]
            if pending == 2:
                # a nested stabilization contracted the working string
                wlen = len(w) - 1
                if f[0] == wlen:
                    frames.pop()
                    continue
                if f[2] == wlen:
                    # restore the adaptive mirrored value at d
                    pals[f[2]] = pals[2 * f[0] - f[2]]
                    if journal is not None:
                        journal.append(("restore", f[2], pals[f[2]]))
                f[3] = _S_SLOW_NEW
                if self._debug:
                    self._mirror_pending = True
                return self._request_letter()
            if pending == 1:
                stack.append(f[2])
                counters.stack_pushes += 1
                if journal is not None:
                    journal.append(("push", f[2]))
                f[2] -= 1
                f[3] = _S_FOR
                pending = 0
            st = f[3]
            if st == _S_SLOW_NEW:
                f[4] = len(w) - 1 - f[0] - 1
                f[3] = st = _S_SLOW_CMP
                if journal is not None:
                    journal.append(("slow", f[0], f[4]))
            if st == _S_SLOW_CMP:
                c = f[0]
                r = f[4]
                counters.comparisons += 1
                if w[c + r + 1] == w[c - r]:
                    r += 1
                    f[4] = r
                    if pals[c - r] >= r:
                        # suffix Z-shape with pivots (c-r, c): drop its tail
                        self.trace.append(ContractionEvent(c - 1, 2 * r, self._raw_consumed))
                        counters.contractions += 1
                        del w[c - r + 1 :]
                        del pals[c - r + 1 :]
                        if journal is not None:
                            journal.append(("contract", c, r, self._raw_consumed))
                        frames.pop()
                        pending = 2
                        continue
                    pals[c + r] = pals[c - r]  # transfer the mirrored value
                    return self._request_letter()
                pals[c] = r
                if journal is not None:
                    journal.append(("slow_false", c, r))
                f[2] = c + r
                f[3] = st = _S_FOR
            if st == _S_FOR:
                # fix radii on the right arm of c, rightmost first
                c, b, d = f[0], f[1], f[2]
                if d < b:
                    frames.pop()
                    pending = 1
                    continue
                if d + pals[d] >= c + pals[c]:
                    # fast extension via the mirrored palindrome chain
                    fast_true = True
                    while stack:
                        rr = stack[-1] - d
                        if pals[d - rr] >= pals[d + rr]:
                            stack.pop()
                        else:
                            pals[d] = rr + pals[d - rr]
                            fast_true = False
                            break
                    if journal is not None:
                        journal.append(("fast", d, fast_true))
                    if fast_true:
                        f[3] = _S_RET
                        frames.append([d, len(w) - 1, 0, _S_SLOW_NEW, 0])
                        counters.stabilize_calls += 1
                        if journal is not None:
                            journal.append(("stab", d))
                    else:
                        stack.append(d)
                        counters.stack_pushes += 1
                        if journal is not None:
                            journal.append(("push", d))
                        f[2] -= 1
                else:
                    f[2] -= 1
        # back at the main loop, awaiting the next letter
        self._root_was_false = pending == 1
        if self._debug:
            self._validate_boundary()

    # -- debug-validation mode ----------------------------------------------

    def _dump(self) -> dict:
        return {
            "consumed": self._raw_consumed,
            "w": list(self._w[1:]),
            "pals": list(self._pals[1:]),
            "frames": [list(f) for f in self._frames],
            "stack": list(self._stack),
        }

    def _fail(self, what: str) -> None:
        raise DebugValidationError(what, self._dump())

    def _check_mirror(self) -> None:
        # transferred values right of c must mirror the left arm
        f = self._frames[-1]
        c = f[0]
        wlen = len(self._w) - 1
        for d in range(c + 1, wlen):
            if self._pals[d] != self._pals[2 * c - d]:
                self._fail(f"mirror violated at {d} (center {c})")

    def _validate_boundary(self) -> None:
        wlen = len(self._w) - 1
        if wlen > _DEBUG_CAP:
            return
        arr = np.array(self._w[1:], dtype=np.int32)
        radii = np.zeros(wlen, dtype=np.int32)
        _kernels.naive_radii_kernel(arr, radii)
        if _kernels.z_pairs(radii).shape[0]:
            self._fail("working string is reducible at a letter boundary")
        if self._root_was_false:
            for pos in range(1, wlen):
                if self._pals[pos] != int(radii[pos - 1]):
                    self._fail(f"settled radius at {pos} is not exact")
            table = frontier_table(radii)
            for pos in range(1, wlen):
                if table[pos - 1] >= wlen:
                    self._fail(f"settled position {pos} is not stable")


# ---------------------------------------------------------------------------
# batch entry points


def _check_input(t: LabeledString) -> None:
    if len(t) and int(t.ids.min()) < FIRST_USER_ID:
        raise ValueError("input contains reserved sentinel ids")


def reduce(t: LabeledString, debug_validate: bool = False) -> LabeledString:
    """The Z-normal form of ``t``: the unique irreducible string reachable
    by repeatedly deleting Z-shape tails."""
    _check_input(t)
    if debug_validate:
        machine = Reducer(t.alphabet, debug_validate=True)
        machine.feed_all(t.ids.tolist())
        return machine.finish()
    out_ids, _, _ = _kernels.zreduce(t.ids, collect_trace=False)
    return LabeledString(out_ids, t.alphabet)


def reduce_with_stats(
    t: LabeledString, collect_trace: bool = True
) -> tuple[LabeledString, Counters, list[ContractionEvent]]:
    """Like :func:`reduce` but also returns operation counters and the
    contraction trace."""
    _check_input(t)
    out_ids, regs, rows = _kernels.zreduce(t.ids, collect_trace=collect_trace)
    counters = Counters(
        comparisons=int(regs[_kernels.R_COMPS]),
        appends=int(regs[_kernels.R_READS]),
        stack_pushes=int(regs[_kernels.R_PUSHES]),
        stabilize_calls=int(regs[_kernels.R_STABS]),
        contractions=int(regs[_kernels.R_NCONTR]),
    )
    trace = [ContractionEvent(*row) for row in rows]
    return LabeledString(out_ids, t.alphabet), counters, trace
