"""Pure-Python longest chordless path search (reference backend).

Mirrors ``_chordless.pyx`` line for line; keep the two in sync.
"""

from __future__ import annotations

from typing import Sequence


def chordless_search(
    nv: int,
    out_ptr: Sequence[int],
    out_idx: Sequence[int],
    in_ptr: Sequence[int],
    in_idx: Sequence[int],
    loop: Sequence[int],
    budget: int,
) -> tuple[list[int], int, bool]:
    """Depth-first search for a longest simple path with no chord and no loop vertex.

    Graph is given in CSR form (out- and in-adjacency, each row sorted).
    A vertex may be appended only if it has no arc into the current path;
    ``blocked[u]`` counts arcs from ``u`` into the path and ``avail`` counts
    vertices that could still be appended, which bounds any extension.

    Returns ``(best_path, expansions, complete)``; ``complete`` is False when
    the expansion budget ran out.
    """
    on_path = [False] * nv
    blocked = [0] * nv
    avail = sum(1 for v in range(nv) if not loop[v])
    path: list[int] = []
    cursor: list[int] = []
    best: list[int] = []
    expansions = 0

    def push(v: int) -> None:
        nonlocal avail
        on_path[v] = True
        avail -= 1
        for k in range(in_ptr[v], in_ptr[v + 1]):
            u = in_idx[k]
            if loop[u] or on_path[u]:
                continue
            if blocked[u] == 0:
                avail -= 1
            blocked[u] += 1
        path.append(v)
        cursor.append(out_ptr[v])

    def pop() -> None:
        nonlocal avail
        v = path.pop()
        cursor.pop()
        for k in range(in_ptr[v], in_ptr[v + 1]):
            u = in_idx[k]
            if loop[u] or on_path[u]:
                continue
            blocked[u] -= 1
            if blocked[u] == 0:
                avail += 1
        on_path[v] = False
        avail += 1

    for start in range(nv):
        if loop[start]:
            continue
        if avail <= len(best):
            break
        if expansions >= budget:
            return best, expansions, False
        push(start)
        expansions += 1
        if len(path) > len(best):
            best = path[:]
        while path:
            depth = len(path)
            top = path[-1]
            if depth + avail <= len(best) or cursor[-1] >= out_ptr[top + 1]:
                pop()
                continue
            v = out_idx[cursor[-1]]
            cursor[-1] += 1
            if loop[v] or on_path[v] or blocked[v]:
                continue
            if expansions >= budget:
                while path:
                    pop()
                return best, expansions, False
            push(v)
            expansions += 1
            if len(path) > len(best):
                best = path[:]
    return best, expansions, True
