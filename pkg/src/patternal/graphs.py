"""De Bruijn graphs, pattern-overlap graphs and searches over them.

Vertices of a :class:`WordGraph` are words of one length ``n`` kept in
lexicographic order; an arc ``u -> v`` means ``u = a.w`` and ``v = w.b``.
Searches work on vertex indices, so index order is word order and every
"first found" answer is also the lexicographically least one.
"""

from __future__ import annotations

import json
from array import array
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

from . import _kernels
from .limits import DEFAULT_SEARCH_BUDGET, check_vertex_count
from .words import Word, enumerate_patterns, format_word, parse_word

DEBRUIJN = "debruijn"
PATTERN = "pattern"
LINE = "line"


@dataclass(frozen=True, eq=False)
class WordGraph:
    n: int
    m: int
    kind: str
    vertices: tuple[Word, ...]
    succ: tuple[tuple[int, ...], ...]
    index: dict[Word, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", {w: i for i, w in enumerate(self.vertices)})

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        preds: list[list[int]] = [[] for _ in self.vertices]
        for u, targets in enumerate(self.succ):
            for v in targets:
                preds[v].append(u)
        return tuple(tuple(sorted(p)) for p in preds)

    @property
    def num_arcs(self) -> int:
        return sum(len(t) for t in self.succ)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, targets in enumerate(self.succ):
            for v in targets:
                yield u, v

    def word_arcs(self) -> set[tuple[Word, Word]]:
        return {(self.vertices[u], self.vertices[v]) for u, v in self.arcs()}

    def has_arc(self, u: Word, v: Word) -> bool:
        i, j = self.index.get(u), self.index.get(v)
        return i is not None and j is not None and j in self.succ[i]

    def has_loop(self, i: int) -> bool:
        return i in self.succ[i]

    @property
    def loop_vertices(self) -> list[Word]:
        return [w for i, w in enumerate(self.vertices) if self.has_loop(i)]

    def out_degree(self, w: Word) -> int:
        return len(self.succ[self.index[w]])

    def in_degree(self, w: Word) -> int:
        return len(self.pred[self.index[w]])

    def same_as(self, other: "WordGraph") -> bool:
        """Equal vertex labels and equal arcs (kind is ignored)."""
        return self.vertices == other.vertices and self.word_arcs() == other.word_arcs()

    def is_subgraph_of(self, other: "WordGraph") -> bool:
        return set(self.vertices) <= set(other.vertices) and self.word_arcs() <= other.word_arcs()

    def csr(self) -> tuple[array, array, array, array, bytes]:
        out_ptr, out_idx = _to_csr(self.succ)
        in_ptr, in_idx = _to_csr(self.pred)
        loops = bytes(int(self.has_loop(i)) for i in range(len(self)))
        return out_ptr, out_idx, in_ptr, in_idx, loops


def _to_csr(rows: Iterable[Iterable[int]]) -> tuple[array, array]:
    ptr = array("i", [0])
    idx = array("i")
    for row in rows:
        idx.extend(sorted(row))
        ptr.append(len(idx))
    return ptr, idx


def _check_params(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")


def _overlap_graph(n: int, m: int, kind: str, vertices: list[Word], letters: int) -> WordGraph:
    index = {w: i for i, w in enumerate(vertices)}
    succ = []
    for u in vertices:
        tail = u[1:]
        succ.append(tuple(j for b in range(1, letters + 1) if (j := index.get(tail + (b,))) is not None))
    return WordGraph(n, m, kind, tuple(vertices), tuple(succ))


def build_de_bruijn(n: int, m: int, max_vertices: int | None = None) -> WordGraph:
    _check_params(n, m)
    check_vertex_count(m**n, max_vertices)
    vertices = list(product(range(1, m + 1), repeat=n))
    return _overlap_graph(n, m, DEBRUIJN, vertices, m)


def build_pattern_graph(n: int, m: int, max_vertices: int | None = None) -> WordGraph:
    """Induced subgraph of the de Bruijn graph on the length-``n`` patterns."""
    _check_params(n, m)
    vertices = enumerate_patterns(n, m, max_vertices)
    return _overlap_graph(n, m, PATTERN, vertices, min(n, m))


def build_graph(kind: str, n: int, m: int, max_vertices: int | None = None) -> WordGraph:
    if kind == DEBRUIJN:
        return build_de_bruijn(n, m, max_vertices)
    if kind == PATTERN:
        return build_pattern_graph(n, m, max_vertices)
    raise ValueError(f"unknown graph kind {kind!r}")


def line_graph(g: WordGraph) -> WordGraph:
    """Line graph, each arc ``u -> v`` relabelled by the word ``u + v[-1]``."""
    labels = sorted((g.vertices[u] + g.vertices[v][-1:], u, v) for u, v in g.arcs())
    index = {(u, v): i for i, (_, u, v) in enumerate(labels)}
    succ = tuple(tuple(sorted(index[(v, w)] for w in g.succ[v])) for _, _, v in labels)
    return WordGraph(g.n + 1, g.m, LINE, tuple(lab for lab, _, _ in labels), succ)


# -- paths and chords -------------------------------------------------------


@dataclass(frozen=True)
class GraphPath:
    vertices: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def arcs(self) -> list[tuple[Word, Word]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def is_walk_in(self, g: WordGraph) -> bool:
        return all(w in g.index for w in self.vertices) and all(g.has_arc(u, v) for u, v in self.arcs)


def is_chord(path: GraphPath, arc: tuple[Word, Word]) -> bool:
    """True iff ``arc`` leaves a path vertex for an earlier (or the same) one.

    Such an arc closes a circuit with the stretch of path it spans.  Forward
    skips never do, and a path arc is never its own chord.
    """
    u, v = arc
    pos = {w: i for i, w in enumerate(path.vertices)}
    if u not in pos or v not in pos:
        return False
    if pos[v] == pos[u] + 1:
        return False
    return pos[v] <= pos[u]


def find_chords(g: WordGraph, path: GraphPath) -> list[tuple[Word, Word]]:
    on_path = set(path.vertices)
    return [
        (u, g.vertices[j])
        for u in path.vertices
        for j in g.succ[g.index[u]]
        if g.vertices[j] in on_path and is_chord(path, (u, g.vertices[j]))
    ]


def is_chordless(g: WordGraph, path: GraphPath) -> bool:
    loops = set(g.loop_vertices)
    return (
        path.is_simple()
        and path.is_walk_in(g)
        and not any(w in loops for w in path.vertices)
        and not find_chords(g, path)
    )


@dataclass(frozen=True)
class ChordlessPathResult:
    path: GraphPath
    exact: bool
    expansions: int
    backend: str

    @property
    def length(self) -> int:
        return len(self.path)


def longest_chordless_path(
    g: WordGraph, budget: int | None = None, backend: str | None = None
) -> ChordlessPathResult:
    """Longest loop-free simple path without chords, by exhaustive search.

    When the expansion budget runs out the best path found so far is returned
    with ``exact=False``: its length is then only a lower bound.
    """
    budget = DEFAULT_SEARCH_BUDGET if budget is None else budget
    if budget <= 0:
        raise ValueError("search budget must be positive")
    name = backend or _kernels.BACKEND
    search = _kernels.load_backend(name).chordless_search
    out_ptr, out_idx, in_ptr, in_idx, loops = g.csr()
    best, expansions, complete = search(len(g), out_ptr, out_idx, in_ptr, in_idx, loops, budget)
    path = GraphPath(tuple(g.vertices[i] for i in best))
    return ChordlessPathResult(path, complete, expansions, name)


# -- cycles, acyclicity, connectivity ----------------------------------------


def _kept(g: WordGraph, removed: Iterable[Word]) -> list[bool]:
    keep = [True] * len(g)
    for w in removed:
        i = g.index.get(tuple(w))
        if i is None:
            raise ValueError(f"{w} is not a vertex of the graph")
        keep[i] = False
    return keep


def topological_order(g: WordGraph, removed: Iterable[Word] = ()) -> list[int] | None:
    """Kahn order of the surviving vertices, or None if a cycle survives."""
    keep = _kept(g, removed)
    indeg = [0] * len(g)
    for u, v in g.arcs():
        if keep[u] and keep[v]:
            indeg[v] += 1
    queue = deque(i for i in range(len(g)) if keep[i] and indeg[i] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in g.succ[u]:
            if keep[v]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
    return order if len(order) == sum(keep) else None


def is_acyclic(g: WordGraph, removed: Iterable[Word] = ()) -> bool:
    """True iff deleting ``removed`` leaves no directed cycle (loops count)."""
    return topological_order(g, removed) is not None


def longest_path_dag(g: WordGraph, removed: Iterable[Word] = ()) -> list[Word]:
    """Lexicographically least among the longest paths of the residual DAG."""
    removed = list(removed)
    order = topological_order(g, removed)
    if order is None:
        raise ValueError("residual graph has a cycle")
    keep = _kept(g, removed)
    longest = [0] * len(g)
    for u in reversed(order):
        longest[u] = 1 + max((longest[v] for v in g.succ[u] if keep[v]), default=0)
    if not order:
        return []
    best = max(longest[u] for u in order)
    cur = min(u for u in order if longest[u] == best)
    path = [cur]
    while longest[cur] > 1:
        cur = min(v for v in g.succ[cur] if keep[v] and longest[v] == longest[cur] - 1)
        path.append(cur)
    return [g.vertices[i] for i in path]


def shortest_cycle(g: WordGraph, removed: Iterable[Word] = ()) -> list[Word] | None:
    """A shortest directed cycle among surviving vertices, or None.

    Ties go to the cycle through the smallest vertex; the route from it is
    the first one breadth-first search meets, so the answer is deterministic.
    """
    keep = _kept(g, removed)
    best: list[int] | None = None
    for s in range(len(g)):
        if not keep[s]:
            continue
        limit = len(best) if best is not None else len(g)
        parent = {s: -1}
        frontier = [s]
        found = None
        depth = 0
        while frontier and found is None and depth < limit:
            depth += 1
            nxt = []
            for u in frontier:
                for v in g.succ[u]:
                    if not keep[v] or v < s:
                        continue
                    if v == s:
                        found = u
                        break
                    if v not in parent:
                        parent[v] = u
                        nxt.append(v)
                if found is not None:
                    break
            frontier = nxt
        if found is not None:
            cycle = []
            u = found
            while u != -1:
                cycle.append(u)
                u = parent[u]
            cycle.reverse()
            if best is None or len(cycle) < len(best):
                best = cycle
    return None if best is None else [g.vertices[i] for i in best]


def _reach(adj: tuple[tuple[int, ...], ...], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_strongly_connected(g: WordGraph) -> bool:
    if len(g) == 0:
        raise ValueError("empty graph")
    return len(_reach(g.succ, 0)) == len(g) and len(_reach(g.pred, 0)) == len(g)


# -- export ------------------------------------------------------------------


def export_graph(g: WordGraph, fmt: str) -> bytes:
    fmt = fmt.lower()
    labels = [format_word(w, g.m) for w in g.vertices]
    if fmt == "json":
        doc = {
            "n": g.n,
            "m": g.m,
            "kind": g.kind,
            "vertices": labels,
            "arcs": [[u, v] for u, v in g.arcs()],
        }
        return (json.dumps(doc) + "\n").encode()
    if fmt == "dot":
        lines = [f'digraph "{g.kind}_{g.n}_{g.m}" {{']
        lines += [f'  "{lab}";' for lab in labels]
        lines += [f'  "{labels[u]}" -> "{labels[v]}";' for u, v in g.arcs()]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r}")


def graph_from_json(data: bytes | str) -> WordGraph:
    doc = json.loads(data)
    vertices = tuple(parse_word(s) for s in doc["vertices"])
    succ: list[list[int]] = [[] for _ in vertices]
    for u, v in doc["arcs"]:
        succ[u].append(v)
    return WordGraph(doc["n"], doc["m"], doc["kind"], vertices, tuple(tuple(sorted(s)) for s in succ))
