"""Corpus generators: seeded random strings and the adversarial family.

Random strings are produced by splitmix64 so that corpora are reproducible
bit-for-bit across machines and implementations: with state ``s`` (the seed),
each step is

    s += 0x9E3779B97F4A7C15                    (mod 2**64)
    z = s
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2**64)
    z = z ^ (z >> 31)

and the k-th symbol is letter number ``z_k mod sigma``.

The adversarial family doubles in length per level: level 0 is ``ba`` and
level i wraps the previous string as  reverse(v) + a t t a + v  with a fresh
letter t, then appends a power-of-two run of ``a``.  Reducing it forces any
strategy that keeps exact radii to rescan the long palindromic prefix over
and over, which is the superlinear contrast case for the benchmark.
"""

from typing import Optional, TextIO, Union

import numpy as np

from . import _backend
from ._kernels import fill_random_kernel
from .core import Alphabet, LabeledString, from_text

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The fixed 64-bit generator documented above."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


def _letter_name(k: int) -> str:
    if k < 26:
        return chr(ord("a") + k)
    return f"s{k}"


def letters_alphabet(sigma: int) -> Alphabet:
    """Alphabet holding the first ``sigma`` generator letters a, b, c, ..."""
    return Alphabet(_letter_name(k) for k in range(sigma))


def random_string(
    n: int, sigma: int, seed: int, alphabet: Optional[Alphabet] = None
) -> LabeledString:
    """Uniform i.i.d. string of length ``n`` over the first ``sigma``
    registered letters, deterministic per seed."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if sigma < 1:
        raise ValueError("alphabet size must be at least 1")
    ab = alphabet if alphabet is not None else letters_alphabet(sigma)
    letter_ids = np.array([ab.intern(_letter_name(k)) for k in range(sigma)], dtype=np.int32)
    out = np.zeros(n, dtype=np.int32)
    if n:
        if _backend.use_numba():
            fill_random_kernel(out, seed, sigma)
            out -= 2
        else:
            rng = SplitMix64(seed)
            for i in range(n):
                out[i] = rng.next() % sigma
        out = letter_ids[out]
    return LabeledString(out, ab)


def adversarial(m: int, alphabet: Optional[Alphabet] = None):
    """Level-``m`` adversarial input.

    Returns ``(full, base)``: ``full`` is ``base`` followed by ``2**m``
    copies of ``a``, and reducing it yields ``base`` back.  Fresh letters
    are named "1".."9" and then "t10", "t11", ...
    """
    if m < 0:
        raise ValueError("level must be non-negative")
    ab = alphabet if alphabet is not None else Alphabet()
    b = ab.intern("b")
    a = ab.intern("a")
    v = [b, a]
    for i in range(1, m + 1):
        t = ab.intern(str(i) if i <= 9 else f"t{i}")
        v = v[::-1] + [a, t, t, a] + v
    full = v + [a] * (2**m)
    return LabeledString(full, ab), LabeledString(v, ab)


# ---------------------------------------------------------------------------
# corpus files: UTF-8, one string per line, optional leading alphabet header


def write_corpus(
    fh: TextIO,
    strings: list[LabeledString],
    delimiter: Optional[str] = None,
    header: bool = True,
) -> None:
    if header and strings:
        ab = strings[0].alphabet
        names = " ".join(ab.names().values())
        fh.write(f"# alphabet: {names}\n")
    for s in strings:
        fh.write(s.to_text(delimiter) + "\n")


def read_corpus(
    fh: TextIO, alphabet: Optional[Alphabet] = None, delimiter: Optional[str] = None
) -> list[LabeledString]:
    ab = alphabet if alphabet is not None else Alphabet()
    out = []
    first = True
    for line in fh:
        line = line.rstrip("\n")
        if first and line.startswith("# alphabet:"):
            for name in line[len("# alphabet:") :].split():
                ab.intern(name)
            first = False
            continue
        first = False
        out.append(from_text(line, ab, delimiter))
    return out
