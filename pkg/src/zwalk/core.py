"""Symbol and string model plus definition-level palindrome/Z-shape primitives.

A *symbol* is a dense non-negative integer id.  Ids 0 and 1 are reserved for
the two out-of-band sentinels used by the scanning algorithms and never
appear in user strings; an :class:`Alphabet` hands out ids starting at 2 in
order of first appearance.

Positions in all public signatures are 1-based, matching the usual string
convention: ``w[i:j]`` with ``j < i`` denotes the empty string, the center
``c`` of an even palindrome sits between positions ``c`` and ``c+1``.
Underlying id arrays are ordinary 0-based numpy arrays.
"""

from typing import Iterable, Iterator, NamedTuple, Optional, Union

import numpy as np

from ._kernels import FIRST_USER_ID, naive_radii_kernel, z_pairs

Symbol = int


class Alphabet:
    """Order-of-first-appearance registry mapping symbol names to ids >= 2."""

    __slots__ = ("_names", "_ids")

    def __init__(self, names: Iterable[str] = ()):
        self._names: list[str] = []
        self._ids: dict[str, int] = {}
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> Symbol:
        """Return the id for ``name``, registering it if new."""
        sym = self._ids.get(name)
        if sym is None:
            sym = FIRST_USER_ID + len(self._names)
            self._ids[name] = sym
            self._names.append(name)
        return sym

    def id_of(self, name: str) -> Symbol:
        return self._ids[name]

    def name_of(self, sym: Symbol) -> str:
        if sym < FIRST_USER_ID:
            raise ValueError(f"id {sym} is a reserved sentinel")
        return self._names[sym - FIRST_USER_ID]

    def names(self) -> dict[Symbol, str]:
        return {FIRST_USER_ID + i: name for i, name in enumerate(self._names)}

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: str) -> bool:
        return name in self._ids

    def __repr__(self) -> str:
        return f"Alphabet({self._names!r})"


class LabeledString:
    """Immutable sequence of symbol ids carrying the walk's edge labels."""

    __slots__ = ("ids", "alphabet")

    def __init__(self, ids, alphabet: Alphabet):
        arr = np.ascontiguousarray(ids, dtype=np.int32)
        if arr.ndim != 1:
            raise ValueError("ids must be one-dimensional")
        arr.setflags(write=False)
        self.ids = arr
        self.alphabet = alphabet

    def __len__(self) -> int:
        return int(self.ids.shape[0])

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids.tolist())

    def __getitem__(self, key) -> Union["LabeledString", int]:
        if isinstance(key, slice):
            return LabeledString(self.ids[key], self.alphabet)
        return int(self.ids[key])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledString):
            return NotImplemented
        return self.ids.shape == other.ids.shape and bool(np.all(self.ids == other.ids))

    def __hash__(self) -> int:
        return hash(self.ids.tobytes())

    def __add__(self, other: "LabeledString") -> "LabeledString":
        return LabeledString(np.concatenate((self.ids, other.ids)), self.alphabet)

    def reverse(self) -> "LabeledString":
        return LabeledString(self.ids[::-1], self.alphabet)

    def to_text(self, delimiter: Optional[str] = None) -> str:
        names = [self.alphabet.name_of(s) for s in self.ids.tolist()]
        if delimiter is None:
            for name in names:
                if len(name) != 1:
                    raise ValueError(
                        f"symbol name {name!r} is not a single character; pass a delimiter"
                    )
            return "".join(names)
        return delimiter.join(names)

    def __repr__(self) -> str:
        try:
            return f"LabeledString({self.to_text()!r})"
        except (ValueError, IndexError):
            return f"LabeledString(ids={self.ids.tolist()!r})"


def from_text(
    text: str, alphabet: Optional[Alphabet] = None, delimiter: Optional[str] = None
) -> LabeledString:
    """Build a string from text, interning each character (or each
    delimiter-separated token) in order of first appearance."""
    ab = alphabet if alphabet is not None else Alphabet()
    if delimiter is None:
        tokens = list(text)
    else:
        tokens = [tok for tok in text.split(delimiter) if tok != ""]
    return LabeledString([ab.intern(tok) for tok in tokens], ab)


class ZOccurrence(NamedTuple):
    """A Z-shape occurrence given by its left and right pivot positions."""

    p1: int
    p2: int

    @property
    def arm(self) -> int:
        return self.p2 - self.p1

    @property
    def start(self) -> int:
        return self.p1 - self.arm + 1

    @property
    def end(self) -> int:
        return self.p2 + self.arm


def _check_no_sentinels(w: LabeledString) -> None:
    if len(w) and int(w.ids.min()) < FIRST_USER_ID:
        raise ValueError("string contains reserved sentinel ids")


def naive_radius(w: LabeledString, c: int) -> int:
    """Radius of the maximal even palindrome centered at position c,
    straight from the definition."""
    n = len(w)
    if not 1 <= c <= n:
        raise ValueError(f"center {c} out of range 1..{n}")
    s = w.ids
    r = 0
    while c - r - 1 >= 0 and c + r <= n - 1:
        if s[c - r - 1] != s[c + r]:
            break
        r += 1
    return r


def naive_radii(w: LabeledString) -> np.ndarray:
    """Maximal radii at every position; entry ``i`` is position ``i+1``."""
    out = np.zeros(len(w), dtype=np.int32)
    if len(w):
        naive_radii_kernel(w.ids, out)
    return out


def find_z_shapes(w: LabeledString) -> list[ZOccurrence]:
    """All Z-shape occurrences of ``w`` in lexicographic (p1, p2) order;
    empty exactly when ``w`` is irreducible."""
    if len(w) == 0:
        return []
    pairs = z_pairs(naive_radii(w))
    return [ZOccurrence(int(p1), int(p2)) for p1, p2 in pairs]


def contract(w: LabeledString, occ: ZOccurrence) -> LabeledString:
    """Delete the tail of the Z-shape at ``occ``: keep ``w[1:p1]`` plus
    ``w[p2+s+1:]`` where ``s = p2 - p1``."""
    p1, p2 = occ.p1, occ.p2
    s = p2 - p1
    n = len(w)
    if s <= 0 or p1 - s + 1 < 1 or p2 + s > n:
        raise ValueError(f"occurrence {occ} does not fit in a string of length {n}")
    if naive_radius(w, p1) < s or naive_radius(w, p2) < s:
        raise ValueError(f"occurrence {occ} is not a Z-shape of the string")
    kept = np.concatenate((w.ids[:p1], w.ids[p2 + s :]))
    return LabeledString(kept, w.alphabet)
