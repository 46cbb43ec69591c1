import itertools

from hypothesis import HealthCheck, settings

from zwalk.core import Alphabet, LabeledString

settings.register_profile(
    "zwalk",
    deadline=None,  # first kernel call may JIT-compile
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("zwalk")


def S(text: str, alphabet: Alphabet = None) -> LabeledString:
    """Build a string over a shared or fresh alphabet from plain text."""
    ab = alphabet if alphabet is not None else Alphabet()
    return LabeledString([ab.intern(ch) for ch in text], ab)


def all_strings(letters: str, min_len: int, max_len: int, alphabet: Alphabet = None):
    """Yield every string over ``letters`` with length in [min_len, max_len]."""
    ab = alphabet if alphabet is not None else Alphabet()
    ids = [ab.intern(ch) for ch in letters]
    for length in range(min_len, max_len + 1):
        for tup in itertools.product(ids, repeat=length):
            yield LabeledString(list(tup), ab)
