"""Deciding whether a set of prohibited words or patterns can be avoided.

Both deciders reduce to the same graph question.  Delete from the overlap
graph (de Bruijn for words, pattern-overlap for patterns) every vertex whose
word contains a prohibited member.  Arbitrarily long free words are exactly
long walks in what is left, so the set is unavoidable iff the residual graph
is acyclic, and the longest free word comes from the longest residual path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .graphs import (
    WordGraph,
    build_de_bruijn,
    build_pattern_graph,
    is_acyclic,
    longest_path_dag,
    shortest_cycle,
)
from .words import Word, format_word, is_pattern, parse_word, pattern_conjugacy_classes, rotations

WORDS = "words"
PATTERNS = "patterns"
UNAVOIDABLE = "unavoidable"
AVOIDABLE = "avoidable"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ProhibitionSet:
    mode: str
    m: int
    members: frozenset[Word]
    n: int = 0

    def __post_init__(self) -> None:
        if self.mode not in (WORDS, PATTERNS):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.m < 1:
            raise ValueError("alphabet size must be >= 1")
        if not self.members:
            raise ValueError("a prohibition set needs at least one member")
        longest = max(len(w) for w in self.members)
        if self.n == 0:
            object.__setattr__(self, "n", longest)
        elif self.n < longest:
            raise ValueError(f"member longer than n={self.n}")
        for w in self.members:
            if not w:
                raise ValueError("the empty word cannot be prohibited")
            if any(x < 1 or x > self.m for x in w):
                raise ValueError(f"{format_word(w)} uses letters outside [{self.m}]")
            if self.mode == PATTERNS and (len(w) != self.n or not is_pattern(w)):
                raise ValueError(f"{format_word(w)} is not a pattern of length {self.n}")

    @classmethod
    def of(cls, members: Iterable[Iterable[int] | str], m: int, mode: str = WORDS, n: int = 0) -> "ProhibitionSet":
        words = frozenset(parse_word(w) if isinstance(w, str) else tuple(w) for w in members)
        return cls(mode, m, words, n)

    def sorted_members(self) -> list[Word]:
        return sorted(self.members)

    def without(self, w: Word) -> "ProhibitionSet":
        return ProhibitionSet(self.mode, self.m, self.members - {w}, self.n)

    def to_text(self) -> str:
        lines = [f"{self.mode} {self.n} {self.m}"]
        lines += [format_word(w, self.m) for w in sorted(self.members, key=lambda w: (len(w), w))]
        return "\n".join(lines) + "\n"


def parse_prohibition_set(text: str) -> ProhibitionSet:
    """Read the ``mode n m`` header followed by one member word per line."""
    header = None
    members = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] not in (WORDS, PATTERNS):
                raise ParseError("expected header 'words|patterns n m'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("n and m must be integers", lineno) from None
            if n < 1 or m < 1:
                raise ParseError("n and m must be positive", lineno)
            header = (parts[0], n, m, lineno)
            continue
        try:
            w = parse_word(line)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        members.append((w, lineno))
    if header is None:
        raise ParseError("missing header")
    mode, n, m, hline = header
    if not members:
        raise ParseError("no member words", hline)
    for w, lineno in members:
        try:
            ProhibitionSet(mode, m, frozenset([w]), n)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return ProhibitionSet(mode, m, frozenset(w for w, _ in members), n)


def occurs_in(member: Word, w: Word) -> bool:
    k = len(member)
    return any(w[i:i + k] == member for i in range(len(w) - k + 1))


def is_free(w: Word, s: ProhibitionSet) -> bool:
    """True iff no member of ``s`` occurs as a block of consecutive letters of ``w``."""
    w = tuple(w)
    return not any(occurs_in(p, w) for p in s.members)


def normalize_to_length(s: ProhibitionSet, n: int) -> ProhibitionSet:
    """Replace every member shorter than ``n`` by all its length-``n`` superwords."""
    if any(len(w) > n for w in s.members):
        raise ValueError(f"a member is longer than {n}")
    out: set[Word] = set()
    for w in s.members:
        pad = n - len(w)
        if pad == 0:
            out.add(w)
            continue
        for fill in product(range(1, s.m + 1), repeat=pad):
            for cut in range(pad + 1):
                out.add(fill[:cut] + w + fill[cut:])
    return ProhibitionSet(s.mode, s.m, frozenset(out), n)


@dataclass(frozen=True)
class AvoidabilityReport:
    verdict: str
    mode: str
    n: int
    m: int
    longest_free_word: Word | None = None
    witness_cycle: tuple[Word, ...] | None = None
    exact: bool = True

    @property
    def unavoidable(self) -> bool:
        return self.verdict == UNAVOIDABLE

    @property
    def lw(self) -> int | None:
        return None if self.longest_free_word is None else len(self.longest_free_word)

    @property
    def period(self) -> Word | None:
        """One period of the infinite free word traced by the witness cycle."""
        if self.witness_cycle is None:
            return None
        return tuple(v[0] for v in self.witness_cycle)

    def unroll(self, periods: int = 3) -> Word:
        if self.period is None:
            raise ValueError("no witness cycle: the set is unavoidable")
        return self.period * periods

    def to_json(self) -> dict:
        if self.unavoidable:
            certificate = {"type": "longestFreeWord", "word": format_word(self.longest_free_word, self.m)}
        else:
            certificate = {
                "type": "infiniteWitness",
                "cycle": [format_word(v, self.m) for v in self.witness_cycle],
                "period": format_word(self.period, self.m),
            }
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "n": self.n,
            "m": self.m,
            "certificate": certificate,
            "lw": self.lw,
            "exact": self.exact,
        }


def _marked(g: WordGraph, s: ProhibitionSet) -> list[Word]:
    by_len: dict[int, set[Word]] = {}
    for w in s.members:
        by_len.setdefault(len(w), set()).add(w)
    marked = []
    for v in g.vertices:
        for k, group in by_len.items():
            if any(v[i:i + k] in group for i in range(len(v) - k + 1)):
                marked.append(v)
                break
    return marked


def _longest_short_free_word(s: ProhibitionSet, n: int) -> Word:
    # All words of length >= n are blocked; grow free words letter by letter.
    level: list[Word] = [()]
    best: Word = ()
    for _ in range(n - 1):
        nxt = [w + (x,) for w in level for x in range(1, s.m + 1) if is_free(w + (x,), s)]
        if not nxt:
            break
        level = nxt
        best = min(nxt)
    return best


def _decide(g: WordGraph, s: ProhibitionSet, n: int) -> AvoidabilityReport:
    removed = _marked(g, s)
    if not is_acyclic(g, removed):
        cycle = shortest_cycle(g, removed)
        assert cycle is not None
        return AvoidabilityReport(AVOIDABLE, s.mode, n, s.m, witness_cycle=tuple(cycle))
    path = longest_path_dag(g, removed)
    if path:
        longest = path[0] + tuple(v[-1] for v in path[1:])
    elif s.mode == PATTERNS:
        # shorter than one window: any pattern is a free n-pattern word
        longest = (1,) * (n - 1)
    else:
        longest = _longest_short_free_word(s, n)
    return AvoidabilityReport(UNAVOIDABLE, s.mode, n, s.m, longest_free_word=longest)


def decide_words(s: ProhibitionSet, n: int | None = None, max_vertices: int | None = None) -> AvoidabilityReport:
    """Decide a set of prohibited words, possibly of mixed lengths."""
    if s.mode != WORDS:
        raise ValueError("decide_words needs a words-mode set")
    n = s.n if n is None else n
    if n < max(len(w) for w in s.members):
        raise ValueError("n must be at least the longest member length")
    return _decide(build_de_bruijn(n, s.m, max_vertices), s, n)


def decide_patterns(s: ProhibitionSet, n: int | None = None, max_vertices: int | None = None) -> AvoidabilityReport:
    """Decide a set of prohibited patterns over n-pattern words."""
    if s.mode != PATTERNS:
        raise ValueError("decide_patterns needs a patterns-mode set")
    n = s.n if n is None else n
    if n != s.n:
        raise ValueError("prohibited patterns must all have length n")
    return _decide(build_pattern_graph(n, s.m, max_vertices), s, n)


def decide(s: ProhibitionSet, max_vertices: int | None = None) -> AvoidabilityReport:
    if s.mode == WORDS:
        return decide_words(s, max_vertices=max_vertices)
    return decide_patterns(s, max_vertices=max_vertices)


# -- minimal unavoidable pattern sets ------------------------------------------


def _sine_weight_order(rep: Word) -> list[Word]:
    """Rotations of ``rep``, the sign changes of a sine weight first.

    The weight is ``sum_t x_t sin(2 pi t / n)`` (t = 1..n).  Picking, in every
    class, the rotation where the weight turns from <= 0 to > 0 under a shift
    cuts every circuit of the de Bruijn graph in all cases we have checked, so
    the backtracking search almost never has to revisit a choice.
    """
    n = len(rep)
    sines = [math.sin(2 * math.pi * t / n) for t in range(1, n + 1)]
    circ = rotations(rep)
    weights = [sum(x * s for x, s in zip(w, sines)) for w in circ]
    eps = 1e-9
    turning = {
        circ[i] for i in range(n) if weights[i] <= eps and weights[(i + 1) % n] > eps
    }
    members = sorted(set(circ))
    return sorted(turning) + [w for w in members if w not in turning]


def _closes_cycle(g: WordGraph, keep: list[bool], fresh: list[Word]) -> bool:
    """True iff some freshly kept vertex lies on a cycle of kept vertices.

    The kept set was acyclic before ``fresh`` joined it, so any new cycle runs
    through a fresh vertex.
    """
    for w in fresh:
        start = g.index[w]
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.succ[u]:
                if v == start:
                    return True
                if keep[v] and v not in seen:
                    seen.add(v)
                    stack.append(v)
    return False


def _select_representatives(g: WordGraph, classes: list[list[Word]]) -> list[Word]:
    # Pick one vertex per class, class by class.  Vertices of decided classes
    # that were not picked stay in the graph for good, so a cycle among them
    # rules out the current partial choice.
    keep = [False] * len(g)
    choice = [0] * len(classes)
    depth = 0
    while 0 <= depth < len(classes):
        options = classes[depth]
        if choice[depth] >= len(options):
            choice[depth] = 0
            depth -= 1
            if depth >= 0:
                for w in classes[depth]:
                    keep[g.index[w]] = False
                choice[depth] += 1
            continue
        picked = options[choice[depth]]
        fresh = [w for w in options if w != picked]
        for w in fresh:
            keep[g.index[w]] = True
        if _closes_cycle(g, keep, fresh):
            for w in options:
                keep[g.index[w]] = False
            choice[depth] += 1
            continue
        depth += 1
    if depth < 0:
        raise RuntimeError("no representative selection cuts every circuit")
    return [classes[i][choice[i]] for i in range(len(classes))]


def minimal_unavoidable_pattern_set(n: int, m: int, max_vertices: int | None = None) -> ProhibitionSet:
    """An unavoidable set of length-``n`` patterns with one member per rotation class.

    Its size is the number of rotation classes, which no unavoidable set can
    undercut: a periodic word built from any pattern only ever shows that
    pattern's rotations.
    """
    g = build_pattern_graph(n, m, max_vertices)
    classes = pattern_conjugacy_classes(n, m, max_vertices)
    least = [c.representative for c in classes]
    if is_acyclic(g, least):
        chosen = least
    else:
        chosen = _select_representatives(g, [_sine_weight_order(c.representative) for c in classes])
        assert is_acyclic(g, chosen)
    return ProhibitionSet(PATTERNS, m, frozenset(chosen), n)
