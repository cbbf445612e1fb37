"""Words over the ordered alphabet [m] = {1..m}, patterns and rotation classes.

A word is a plain ``tuple`` of positive ints.  Letters are 1-based; data
given over ``{0, 1, ...}`` is shifted with :func:`from_zero_based` before it
enters the library.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .limits import check_vertex_count

Word = tuple[int, ...]


def word(letters: Iterable[int]) -> Word:
    w = tuple(int(x) for x in letters)
    if any(x < 1 for x in w):
        raise ValueError(f"letters must be >= 1: {w}")
    return w


def from_zero_based(letters: Iterable[int] | str) -> Word:
    """Shift a word over {0, 1, ...} onto {1, 2, ...} (0 -> 1, 1 -> 2)."""
    if isinstance(letters, str):
        letters = [int(ch) for ch in letters]
    return tuple(int(x) + 1 for x in letters)


def parse_word(text: str) -> Word:
    """Parse the text format: a digit string, or comma-separated ints.

    >>> parse_word("1213")
    (1, 2, 1, 3)
    >>> parse_word("1,12,3")
    (1, 12, 3)
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.rstrip(",").split(",")]
    else:
        parts = list(text)
    if not all(p.isdigit() for p in parts):
        raise ValueError(f"not a word: {text!r}")
    return word(int(p) for p in parts)


def format_word(w: Sequence[int], m: int | None = None) -> str:
    """Inverse of :func:`parse_word`; comma-separated once letters exceed 9.

    A one-letter wide word keeps a trailing comma ("10,") so it cannot be
    read back as two digits.
    """
    wide = max(w, default=0) > 9 or (m is not None and m > 9)
    if wide:
        out = ",".join(str(x) for x in w)
        return out + "," if len(w) == 1 else out
    return "".join(str(x) for x in w)


def is_pattern(w: Sequence[int]) -> bool:
    """True iff the letters of ``w`` are exactly {1..k}, k the largest letter.

    The empty word counts as a pattern (k = 0).
    """
    if not w:
        return True
    letters = set(w)
    return len(letters) == max(letters) and min(letters) == 1


def is_n_pattern_word(w: Sequence[int], n: int) -> bool:
    """True iff every length-``n`` window of ``w`` is a pattern.

    Words shorter than ``n`` have no full window; for them this returns
    ``is_pattern(w)``.
    """
    if n < 1:
        raise ValueError("window length must be >= 1")
    if len(w) < n:
        return is_pattern(w)
    return all(is_pattern(w[i:i + n]) for i in range(len(w) - n + 1))


def rotate(w: Word, k: int = 1) -> Word:
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def rotations(w: Word) -> list[Word]:
    return [w[i:] + w[:i] for i in range(len(w))]


def least_rotation(w: Word) -> Word:
    return min(rotations(w))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Word
    members: frozenset[Word]

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Word]:
        return sorted(self.members)

    def __contains__(self, w: object) -> bool:
        return w in self.members


def conjugacy_class(w: Word) -> ConjugacyClass:
    if not w:
        raise ValueError("the empty word has no conjugacy class")
    rs = rotations(tuple(w))
    return ConjugacyClass(min(rs), frozenset(rs))


@dataclass(frozen=True)
class PrimitiveDecomposition:
    root: Word
    exponent: int

    def expand(self) -> Word:
        return self.root * self.exponent


def primitive_decomposition(w: Word) -> PrimitiveDecomposition:
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise ValueError("the empty word has no primitive root")
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return PrimitiveDecomposition(w[:p], n // p)
    raise AssertionError("unreachable")


def _patterns(n: int, k: int) -> Iterator[Word]:
    # Depth-first in lexicographic order.  A prefix with largest letter M is
    # viable only while the letters of 1..M it still lacks fit in the room left.
    prefix: list[int] = []
    seen = [0] * (k + 1)

    def rec(top: int, missing: int) -> Iterator[Word]:
        room = n - len(prefix)
        if room == 0:
            if missing == 0:
                yield tuple(prefix)
            return
        for x in range(1, k + 1):
            if x > top:
                # top+1..x-1 become missing; x itself is present
                new_top, new_missing = x, missing + (x - top - 1)
            else:
                new_top, new_missing = top, missing - (seen[x] == 0)
            if new_missing > room - 1:
                continue
            prefix.append(x)
            seen[x] += 1
            yield from rec(new_top, new_missing)
            seen[x] -= 1
            prefix.pop()

    yield from rec(0, 0)


def enumerate_patterns(n: int, m: int, max_vertices: int | None = None) -> list[Word]:
    """All patterns of length ``n`` over [m], in lexicographic order."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    from .formulas import pattern_count

    check_vertex_count(pattern_count(n, m).value, max_vertices)
    return list(_patterns(n, min(n, m)))


def pattern_conjugacy_classes(n: int, m: int, max_vertices: int | None = None) -> list[ConjugacyClass]:
    """Rotation classes of the length-``n`` patterns, ordered by representative."""
    groups: dict[Word, set[Word]] = {}
    for w in enumerate_patterns(n, m, max_vertices):
        groups.setdefault(least_rotation(w), set()).add(w)
    return [ConjugacyClass(rep, frozenset(groups[rep])) for rep in sorted(groups)]
