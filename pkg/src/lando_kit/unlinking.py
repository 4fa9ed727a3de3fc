"""Unlinkedness of two edge sets in a tree.

``p`` is on one side of ``q`` when ``p`` avoids ``q`` and every path between
endpoints of ``p``-edges crosses ``q`` an even number of times.  Two sets are
unlinked when each is on one side of the other.

:func:`unlinked` answers with a single parity table per direction.
:func:`unlinked_oracle` builds the components of the tree minus ``q`` and
2-colors their quotient tree instead; the two must always agree.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .tree_core import EdgeSet, ParityTable, Tree, check_edge_set, parity_table


def endpoints_on_one_side(t: Tree, p: Iterable[int], table: ParityTable) -> bool:
    """True iff all endpoints of ``p``-edges share one parity in ``table``."""
    seen: int | None = None
    for eid in p:
        e = t.edges[eid]
        for x in (e.u, e.v):
            if seen is None:
                seen = table.parity[x]
            elif table.parity[x] != seen:
                return False
    return True


def on_one_side(t: Tree, p: Iterable[int], q: Iterable[int]) -> bool:
    p, q = check_edge_set(t, p), check_edge_set(t, q)
    if p & q:
        return False
    return endpoints_on_one_side(t, p, parity_table(t, q))


def unlinked(t: Tree, p: Iterable[int], q: Iterable[int]) -> bool:
    p, q = check_edge_set(t, p), check_edge_set(t, q)
    return on_one_side(t, p, q) and on_one_side(t, q, p)


def _one_side_by_components(t: Tree, p: EdgeSet, q: EdgeSet) -> bool:
    # components of t with the interiors of q-edges removed
    comp = [-1] * t.vertex_count
    ncomp = 0
    for start in range(t.vertex_count):
        if comp[start] >= 0:
            continue
        comp[start] = ncomp
        stack = [start]
        while stack:
            x = stack.pop()
            for y, eid in t.adjacency[x]:
                if eid not in q and comp[y] < 0:
                    comp[y] = ncomp
                    stack.append(y)
        ncomp += 1

    # quotient tree: components as nodes, q-edges as edges; 2-color it
    quotient: list[list[int]] = [[] for _ in range(ncomp)]
    for eid in q:
        e = t.edges[eid]
        quotient[comp[e.u]].append(comp[e.v])
        quotient[comp[e.v]].append(comp[e.u])
    color = [-1] * ncomp
    color[0] = 0
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for d in quotient[c]:
            if color[d] < 0:
                color[d] = 1 - color[c]
                queue.append(d)

    # each p-edge must lie inside one component, all of one color
    colors_used = set()
    for eid in p:
        e = t.edges[eid]
        if comp[e.u] != comp[e.v]:
            return False
        colors_used.add(color[comp[e.u]])
    return len(colors_used) <= 1


def unlinked_oracle(t: Tree, p: Iterable[int], q: Iterable[int]) -> bool:
    p, q = check_edge_set(t, p), check_edge_set(t, q)
    return _one_side_by_components(t, p, q) and _one_side_by_components(t, q, p)
