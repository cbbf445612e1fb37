"""Hamiltonian circuits of the pattern-overlap graph and universal cycles.

Every rotation class of patterns is a circuit ``w -> rotate(w) -> ...`` of the
pattern-overlap graph, and these circuits partition its vertices.  The big
circuit is grown from the loop at ``1...1`` by splicing in whole class
circuits: whenever it contains an arc ``xW -> Wz`` and ``Wy`` is an uncovered
pattern, the arc is replaced by

    xW -> Wy -> ... (around the class of Wy) ... -> yW -> Wz

which only uses overlap arcs, since ``yW`` is the rotation just before ``Wy``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import pattern_count
from .graphs import GraphPath, build_pattern_graph, find_chords, longest_chordless_path
from .words import Word, format_word, is_pattern, parse_word, pattern_conjugacy_classes, rotate


@dataclass(frozen=True)
class Circuit:
    vertices: tuple[Word, ...]
    n: int
    m: int

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[tuple[Word, Word]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_valid(self) -> bool:
        """Distinct patterns of length n over [m], consecutive ones overlapping."""
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs):
            return False
        if any(len(v) != self.n or not is_pattern(v) or max(v) > self.m for v in vs):
            return False
        return all(u[1:] == v[:-1] for u, v in self.arcs())

    def is_hamiltonian(self) -> bool:
        return self.is_valid() and len(self) == pattern_count(self.n, self.m).value


def class_circuits(n: int, m: int, max_vertices: int | None = None) -> list[Circuit]:
    """One rotation circuit per class, each starting at its least member."""
    out = []
    for cls in pattern_conjugacy_classes(n, m, max_vertices):
        rep = cls.representative
        out.append(Circuit(tuple(rotate(rep, k) for k in range(cls.size)), n, m))
    return out


def _walk(succ: dict[Word, Word], start: Word) -> tuple[Word, ...]:
    out = [start]
    v = succ[start]
    while v != start:
        out.append(v)
        v = succ[v]
    return tuple(out)


def hamiltonian_circuit(
    n: int,
    m: int,
    chained: bool = False,
    verify: bool = False,
    max_vertices: int | None = None,
) -> Circuit:
    """Hamiltonian circuit of the pattern-overlap graph, by circuit splicing.

    The scan walks the growing circuit vertex by vertex.  At ``xW`` every
    uncovered class reachable through some ``Wy`` is a splice candidate,
    taken in order of class representative.  By default one class is spliced
    per step; ``chained=True`` threads all of them through the same exit
    vertex at once.  ``verify=True`` re-checks the circuit after every splice.
    """
    classes = pattern_conjugacy_classes(n, m, max_vertices)
    class_of = {w: i for i, c in enumerate(classes) for w in c.members}
    size_of = [c.size for c in classes]
    total = sum(size_of)
    letters = min(n, m)

    ones = (1,) * n
    succ: dict[Word, Word] = {ones: ones}
    covered = [False] * len(classes)
    covered[class_of[ones]] = True
    count = 1

    cursor = ones
    idle = 0
    while count < total:
        tail = cursor[1:]
        entries: dict[int, Word] = {}
        for y in range(1, letters + 1):
            v = tail + (y,)
            c = class_of.get(v)
            if c is not None and not covered[c] and c not in entries:
                entries[c] = v
        if not entries:
            cursor = succ[cursor]
            idle += 1
            if idle > count:
                raise AssertionError("no uncovered class is reachable: graph not strongly connected")
            continue

        chosen = sorted(entries) if chained else [min(entries)]
        before = count
        exit_to = succ[cursor]
        prev = cursor
        for c in chosen:
            entry = entries[c]
            v = entry
            for _ in range(size_of[c]):
                succ[prev] = v
                prev = v
                v = rotate(v, 1)
            covered[c] = True
            count += size_of[c]
        # prev is now yW, the rotation just before the last entry Wy
        succ[prev] = exit_to
        idle = 0
        assert count > before
        if verify:
            h = Circuit(_walk(succ, ones), n, m)
            if not h.is_valid() or len(h) != count:
                raise AssertionError(f"splice at {format_word(cursor)} broke the circuit")

    return Circuit(_walk(succ, ones), n, m)


@dataclass(frozen=True)
class UCycle:
    letters: Word
    n: int
    m: int

    def __len__(self) -> int:
        return len(self.letters)

    def windows(self) -> list[Word]:
        L = len(self.letters)
        return [tuple(self.letters[(i + j) % L] for j in range(self.n)) for i in range(L)]

    def to_text(self) -> str:
        return f"ucycle {self.n} {self.m} {len(self)}\n{format_word(self.letters, self.m)}\n"


def parse_ucycle(text: str) -> UCycle:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 2:
        raise ValueError("expected a header line and one word line")
    parts = lines[0].split()
    if len(parts) != 4 or parts[0] != "ucycle":
        raise ValueError("header must read 'ucycle n m length'")
    n, m, length = (int(p) for p in parts[1:])
    letters = parse_word(lines[1])
    if len(letters) != length:
        raise ValueError(f"header says length {length}, word has {len(letters)}")
    return UCycle(letters, n, m)


def ucycle_from_circuit(c: Circuit) -> UCycle:
    if not c.is_hamiltonian():
        raise ValueError("circuit is not Hamiltonian in the pattern-overlap graph")
    return UCycle(tuple(v[0] for v in c.vertices), c.n, c.m)


def validate_ucycle(u: UCycle) -> bool:
    if len(u) < 1 or u.n < 1 or u.m < 1:
        return False
    if len(u) != pattern_count(u.n, u.m).value:
        return False
    if any(x < 1 or x > u.m for x in u.letters):
        return False
    wins = u.windows()
    return all(is_pattern(w) for w in wins) and len(set(wins)) == len(wins)


def generate_ucycle(n: int, m: int, max_vertices: int | None = None) -> UCycle:
    return ucycle_from_circuit(hamiltonian_circuit(n, m, max_vertices=max_vertices))


@dataclass(frozen=True)
class LowerBoundPath:
    path: GraphPath
    verified_chordless: bool
    lifted: bool

    @property
    def length(self) -> int:
        return len(self.path)


def lower_bound_path(n: int, m: int, max_vertices: int | None = None) -> LowerBoundPath:
    """Chordless loop-free path in the length-``n`` pattern graph, lifted from length ``n-1``.

    Each arc ``v -> v'`` of a Hamiltonian circuit one level down becomes the
    vertex ``v + v'[-1]``.  Opened into a path, the lift keeps exactly one
    chord (last vertex back to the first), so trimming from the end leaves a
    certified path of ``pattern_count(n - 1, m) - 1`` vertices.  When the
    level below is the bare loop ``1`` there is nothing to lift and the
    exhaustive search is used instead.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    g = build_pattern_graph(n, m, max_vertices)
    below = hamiltonian_circuit(n - 1, m, max_vertices=max_vertices)
    if len(below) == 1:
        found = longest_chordless_path(g)
        return LowerBoundPath(found.path, not find_chords(g, found.path), lifted=False)

    vs = below.vertices
    lifted = [vs[i] + vs[(i + 1) % len(vs)][-1:] for i in range(len(vs))]
    loops = set(g.loop_vertices)
    assert all(v in g.index and v not in loops for v in lifted)
    verts = list(lifted)
    while verts and find_chords(g, GraphPath(tuple(verts))):
        verts.pop()
    path = GraphPath(tuple(verts))
    ok = path.is_walk_in(g) and path.is_simple() and not find_chords(g, path)
    return LowerBoundPath(path, ok, lifted=True)
