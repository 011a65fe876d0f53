"""Symbolic orbit words over {1..5} and the shift-and-insert rewriting.

Orbit words are cyclic words of even length decomposing into the blocks
43, 41, 25, 23.  The rewriting step T_j subtracts j from every letter
(mod 5, with representative 5 instead of 0) and then inserts, between every
cyclically consecutive pair, the letters passed when walking the chain
1-4-3-2-5 from the first letter to the second.  T_j carries the word pair of
a vertex of the direction tree to the pair of a deeper vertex; see tiling.py
for the matching action on index paths.

Words are plain strings of the characters '1'..'5'; CyclicWord wraps a
string up to rotation with a canonical (lexicographically least) rotation.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

CHAIN = "14325"
_CHAIN_POS = {c: i for i, c in enumerate(CHAIN)}

ALPHABET = "12345"
VALID_BLOCKS = ("43", "41", "25", "23")


def graph_path(a: str, b: str) -> str:
    """Interior letters passed when walking the chain 1-4-3-2-5 from a to b."""
    i, j = _CHAIN_POS[a], _CHAIN_POS[b]
    if i <= j:
        return CHAIN[i + 1:j]
    return CHAIN[j + 1:i][::-1]


_PATHS = {(a, b): graph_path(a, b) for a in ALPHABET for b in ALPHABET}

# letter -> letter - j (mod 5 with 0 represented by 5), as str.translate tables
_SHIFT = {
    j: str.maketrans(ALPHABET, "".join(str((int(c) - j - 1) % 5 + 1)
                                       for c in ALPHABET))
    for j in range(1, 5)
}

_COMPLEMENT = str.maketrans(ALPHABET, "54321")


def rewrite_cyclic(j: int, word: str) -> str:
    """T_j on a cyclic word; the result starts at the image of word[0]."""
    shifted = word.translate(_SHIFT[j])
    parts = []
    n = len(shifted)
    for i, c in enumerate(shifted):
        parts.append(c)
        parts.append(_PATHS[c, shifted[(i + 1) % n]])
    return "".join(parts)


def rewrite_linear(j: int, word: str, normalize: bool = True) -> str:
    """T_j on a linear word: the wrap path goes after the last letter.

    With normalize=True the rotation convention is applied afterwards: a
    leading 3 moves to the end; otherwise a trailing 2 or 4 moves to the
    front.
    """
    out = rewrite_cyclic(j, word)
    if not normalize:
        return out
    return normalize_rotation(out)


def normalize_rotation(word: str) -> str:
    """Rotation convention for linear words produced by the rewriting."""
    if word[0] == "3":
        return word[1:] + word[0]
    if word[-1] in "24":
        return word[-1] + word[:-1]
    return word


def complement(word: str) -> str:
    """Letter-wise m -> 6 - m (vertical reflection on words)."""
    return word.translate(_COMPLEMENT)


def least_rotation(word: str) -> str:
    """Lexicographically least rotation (Booth's algorithm)."""
    s = word + word
    n = len(word)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k:k + n]


def cyclic_eq(u: str, v: str) -> bool:
    """True iff some rotation of u equals v."""
    return len(u) == len(v) and u in v + v


def is_orbit_word(word: str) -> bool:
    """Even length and, in some rotation, a concatenation of valid blocks."""
    if len(word) % 2 or not word:
        return False
    for rot in (word, word[1:] + word[0]):
        if all(rot[i:i + 2] in VALID_BLOCKS for i in range(0, len(rot), 2)):
            return True
    return False


class CyclicWord:
    """A word considered up to rotation, stored in canonical rotation."""

    __slots__ = ("canonical",)

    def __init__(self, letters: str):
        if not letters or any(c not in ALPHABET for c in letters):
            raise ValueError(f"not a word over 1..5: {letters!r}")
        object.__setattr__(self, "canonical", least_rotation(letters))

    def __setattr__(self, name, value):
        raise AttributeError("CyclicWord is immutable")

    def __len__(self):
        return len(self.canonical)

    def __eq__(self, other):
        if isinstance(other, str):
            return cyclic_eq(self.canonical, other)
        if isinstance(other, CyclicWord):
            return self.canonical == other.canonical
        return NotImplemented

    def __hash__(self):
        return hash(self.canonical)

    def __str__(self):
        return self.canonical

    def __repr__(self):
        return f"CyclicWord({self.canonical})"


@dataclass(frozen=True)
class OrbitPair:
    """The (short, long) strip words of a periodic direction.

    Words are stored as generated by the rewriting (specific rotations);
    equality of pairs is cyclic.  When the two periods tie, the short slot
    holds the word with the smaller canonical rotation and `tie` is set.
    """

    short: str
    long: str

    @property
    def periods(self) -> tuple[int, int]:
        return (len(self.short), len(self.long))

    @property
    def tie(self) -> bool:
        return len(self.short) == len(self.long)

    def canonical(self) -> tuple[str, str]:
        return (least_rotation(self.short), least_rotation(self.long))

    def cyclic_words(self) -> tuple[CyclicWord, CyclicWord]:
        return (CyclicWord(self.short), CyclicWord(self.long))


def ordered_pair(u: str, v: str) -> OrbitPair:
    """Order two strip words into (short, long), ties by canonical rotation."""
    if len(u) > len(v) or (len(u) == len(v)
                           and least_rotation(u) > least_rotation(v)):
        u, v = v, u
    return OrbitPair(u, v)


# --- orbit pairs of direction-tree vertices -------------------------------

# The base vertex of the fundamental arc carries the pair (41, 23); its
# mirror endpoint carries (25, 43).  Fixing which end is which and the slot
# order is calibrated against the geodesic tracer (see tracer.py).
BASE_PAIR = OrbitPair("41", "23")
MIRROR_PAIR = OrbitPair("25", "43")

_orbit_cache: dict[tuple[int, ...], OrbitPair] = {}


def complement_path(path: tuple[int, ...]) -> tuple[int, ...]:
    """Digit map of the vertical reflection: 3-n on all but the last, 4-n last."""
    if not path:
        return path
    return tuple(3 - n for n in path[:-1]) + (4 - path[-1],)


def orbit_pair(path: tuple[int, ...]) -> OrbitPair:
    """Strip word pair of the vertex named by an index path.

    Recursion: peel the leading digit m, complement the remaining digits,
    recurse, and apply T_{m+1} slotwise (short maps to short).  Single-digit
    paths come from the base pair the same way, T_d applied to (41, 23).
    """
    validate_path(path)
    cached = _orbit_cache.get(path)
    if cached is not None:
        return cached
    if not path:
        return BASE_PAIR
    if len(path) == 1:
        base = BASE_PAIR
        j = path[0]
    else:
        base = orbit_pair(complement_path(path[1:]))
        j = path[0] + 1
    pair = OrbitPair(rewrite_cyclic(j, base.short), rewrite_cyclic(j, base.long))
    _orbit_cache[path] = pair
    return pair


def validate_path(path: tuple[int, ...]) -> None:
    if any(d not in (0, 1, 2, 3) for d in path):
        raise ValueError(f"index digits must be in 0..3: {path}")
    if path and path[-1] == 0:
        raise ValueError(f"the last index digit is never zero: {path}")


# --- optional persistent cache (PENTA_CACHE_DIR) ---------------------------

_CACHE_VERSION = 1
_CACHE_FILE = "orbit_pairs.json"


def cache_load() -> int:
    """Load orbit pairs from $PENTA_CACHE_DIR, returning how many were read."""
    root = os.environ.get("PENTA_CACHE_DIR")
    if not root:
        return 0
    path = os.path.join(root, _CACHE_FILE)
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return 0
    if data.get("version") != _CACHE_VERSION:
        return 0
    count = 0
    for key, (short, long_) in data.get("orbits", {}).items():
        digits = () if key == "-" else tuple(int(c) for c in key)
        _orbit_cache[digits] = OrbitPair(short, long_)
        count += 1
    return count


def cache_save() -> int:
    """Write the in-memory orbit pairs to $PENTA_CACHE_DIR, if set."""
    root = os.environ.get("PENTA_CACHE_DIR")
    if not root:
        return 0
    os.makedirs(root, exist_ok=True)
    payload = {
        "version": _CACHE_VERSION,
        "orbits": {
            "".join(map(str, k)) or "-": [p.short, p.long]
            for k, p in sorted(_orbit_cache.items())
        },
    }
    tmp = os.path.join(root, _CACHE_FILE + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    os.replace(tmp, os.path.join(root, _CACHE_FILE))
    return len(payload["orbits"])
