"""Online Z-shape detector.

A Manacher-style left-to-right scan that either reports the Z-shape closing
the shortest reducible prefix of the input, or certifies irreducibility while
leaving behind the exact maximal-radius array.  The scan reads letters only
on demand: on a hit it has consumed exactly the reducible prefix (plus the
injected left sentinel), nothing more.

This module only detects.  Using it as a reduction loop (detect, contract,
rescan) is superlinear on adversarial inputs and lives in the benchmark as a
contrast baseline; actual reduction belongs to :mod:`zwalk.reducer`.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._kernels import FIRST_USER_ID, zdetect
from .core import LabeledString, ZOccurrence


@dataclass(frozen=True)
class DetectOutcome:
    """Either the first Z-occurrence or an exact radii array, never both.

    ``reads`` counts every letter appended to the working string including
    the sentinels: prefix+1 on a hit, len+2 on a miss.
    """

    found: Optional[ZOccurrence]
    radii: Optional[np.ndarray]
    reads: int
    comparisons: int

    @property
    def is_irreducible(self) -> bool:
        return self.found is None


def detect_first_z(t: LabeledString) -> DetectOutcome:
    """Scan ``t`` for its first Z-shape.

    Positions in the outcome are sentinel-free and 1-based.  On a hit,
    ``found = (p1, p2)`` is the unique suffix Z-shape of the shortest
    reducible prefix ``t[1 : p2 + (p2-p1)]``.
    """
    if len(t) and int(t.ids.min()) < FIRST_USER_ID:
        raise ValueError("input contains reserved sentinel ids")
    p1, p2, radii, reads, comps = zdetect(t.ids)
    if p1 == 0:
        return DetectOutcome(None, radii, reads, comps)
    return DetectOutcome(ZOccurrence(p1, p2), None, reads, comps)


def is_irreducible(t: LabeledString) -> bool:
    return detect_first_z(t).is_irreducible
