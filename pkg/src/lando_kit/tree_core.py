"""Dual trees of circle systems: validation, bicoloring, incidence and parity.

A circle system on the sphere is represented by its dual tree: one vertex per
complementary region, one labeled edge per circle.  Vertex ids are dense
0-based integers; labels live on edges only.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CycleError,
    DisconnectedError,
    DuplicateLabelError,
    EmptyInputError,
    InvalidEdgeSetError,
    InvalidLabelError,
    InvalidVertexError,
    ParallelEdgeError,
    SelfLoopError,
)

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")

EdgeSet = frozenset  # frozenset[int] of edge ids of one tree
VertexColoring = tuple  # tuple[int, ...], color per vertex id


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    label: str


@dataclass(frozen=True, eq=True)
class Tree:
    vertex_count: int
    edges: tuple[Edge, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: (neighbor, edge id) pairs in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for e in self.edges:
            adj[e.u].append((e.v, e.id))
            adj[e.v].append((e.u, e.id))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {e.label: e.id for e in self.edges}

    def edge_by_label(self, label: str) -> Edge:
        return self.edges[self.label_index[label]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def relabeled(self, perm: Sequence[int]) -> Tree:
        """Return the same tree with vertex ``v`` renamed ``perm[v]``.

        Edge ids and labels are kept.
        """
        if sorted(perm) != list(range(self.vertex_count)):
            raise InvalidVertexError(f"not a vertex permutation: {list(perm)}")
        return Tree(
            self.vertex_count,
            tuple(Edge(e.id, perm[e.u], perm[e.v], e.label) for e in self.edges),
        )


def build_tree(
    edge_list: Iterable[tuple[int, int, str]], vertex_count: int | None = None
) -> Tree:
    """Validate ``(u, v, label)`` triples and return a :class:`Tree`.

    Vertex ids must be dense from 0.  ``vertex_count`` is inferred from the
    largest id unless given; pass ``vertex_count=1`` with no edges for the
    single-vertex tree (empty circle system).
    """
    edge_list = [tuple(e) for e in edge_list]
    if not edge_list:
        if vertex_count == 1:
            return Tree(1, ())
        if vertex_count is None:
            raise EmptyInputError("empty edge list; a 0-edge tree needs vertex_count=1")
        raise DisconnectedError(f"{vertex_count} vertices and no edges")

    seen_pairs: dict[frozenset[int], str] = {}
    seen_labels: set[str] = set()
    max_id = -1
    for u, v, label in edge_list:
        for x in (u, v):
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise InvalidVertexError(f"edge {label!r}: bad vertex id {x!r}")
        if u == v:
            raise SelfLoopError(f"edge {label!r} is a self-loop at vertex {u}")
        key = frozenset((u, v))
        if key in seen_pairs:
            raise ParallelEdgeError(
                f"edge {label!r} is parallel to {seen_pairs[key]!r} between {u} and {v}"
            )
        seen_pairs[key] = label
        if not isinstance(label, str) or not LABEL_RE.match(label):
            raise InvalidLabelError(f"label {label!r} must match [A-Za-z0-9_]+")
        if label in seen_labels:
            raise DuplicateLabelError(f"label {label!r} used twice")
        seen_labels.add(label)
        max_id = max(max_id, u, v)

    n = max_id + 1 if vertex_count is None else vertex_count
    if max_id >= n:
        raise InvalidVertexError(f"vertex {max_id} out of range for {n} vertices")

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, label in edge_list:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleError(f"edge {label!r} ({u}-{v}) closes a cycle")
        parent[ru] = rv
    if len(edge_list) != n - 1:
        roots = sorted({find(x) for x in range(n)})
        stray = [x for x in range(n) if find(x) != find(0)]
        raise DisconnectedError(
            f"{len(roots)} components; vertex {stray[0]} not connected to vertex 0"
        )
    return Tree(n, tuple(Edge(i, u, v, lab) for i, (u, v, lab) in enumerate(edge_list)))


def check_vertex(t: Tree, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < t.vertex_count):
        raise InvalidVertexError(f"vertex {v!r} not in 0..{t.vertex_count - 1}")


def check_edge_set(t: Tree, s: Iterable[int]) -> EdgeSet:
    s = frozenset(s)
    bad = [e for e in s if not (isinstance(e, int) and 0 <= e < t.edge_count)]
    if bad:
        raise InvalidEdgeSetError(f"edge ids {sorted(bad)} invalid for a tree with {t.edge_count} edges")
    return s


def edge_set(t: Tree, labels: Iterable[str]) -> EdgeSet:
    """Edge ids for a collection of labels."""
    out = set()
    for lab in labels:
        if lab not in t.label_index:
            raise InvalidLabelError(f"unknown edge label {lab!r}")
        out.add(t.label_index[lab])
    return frozenset(out)


def incident_edges(t: Tree, v: int) -> EdgeSet:
    check_vertex(t, v)
    return frozenset(eid for _, eid in t.adjacency[v])


def bfs_order(t: Tree, root: int = 0) -> list[tuple[int, int, int]]:
    """(vertex, parent, edge id into vertex) in BFS order; root has parent -1."""
    order = [(root, -1, -1)]
    seen = [False] * t.vertex_count
    seen[root] = True
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, eid in t.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                order.append((y, x, eid))
                queue.append(y)
    return order


def bicolor(t: Tree) -> VertexColoring:
    """Proper 2-coloring: color(v) is the parity of the distance from vertex 0."""
    color = [0] * t.vertex_count
    for v, p, _ in bfs_order(t):
        if p >= 0:
            color[v] = color[p] ^ 1
    return tuple(color)


@dataclass(frozen=True)
class ParityTable:
    """Parity of the number of ``crossing_set`` edges on the path from
    ``reference_vertex`` to each vertex."""

    reference_vertex: int
    crossing_set: EdgeSet
    parity: tuple[int, ...]


def parity_table(t: Tree, q: Iterable[int]) -> ParityTable:
    q = check_edge_set(t, q)
    parity = [0] * t.vertex_count
    for v, p, eid in bfs_order(t):
        if p >= 0:
            parity[v] = parity[p] ^ (eid in q)
    return ParityTable(0, q, tuple(parity))


def same_colored_pairs(t: Tree) -> list[tuple[int, int]]:
    """All pairs ``(A, B)``, ``A < B``, of equally colored vertices, lexicographic."""
    color = bicolor(t)
    n = t.vertex_count
    return [(a, b) for a in range(n) for b in range(a + 1, n) if color[a] == color[b]]


def centroids(t: Tree) -> list[int]:
    """One or two vertices minimizing the largest remaining component, ascending."""
    n = t.vertex_count
    order = bfs_order(t)
    size = [1] * n
    for v, p, _ in reversed(order):
        if p >= 0:
            size[p] += size[v]
    parent = {v: p for v, p, _ in order}
    best, found = n + 1, []
    for v in range(n):
        heaviest = n - size[v]
        for w, _ in t.adjacency[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, found = heaviest, [v]
        elif heaviest == best:
            found.append(v)
    return found


def rooted_code(t: Tree, root: int, exclude: int = -1) -> str:
    """AHU string of the subtree hanging from ``root`` away from ``exclude``.

    Each vertex encodes as ``(`` + sorted child codes + ``)``; equal codes
    iff the rooted subtrees are isomorphic.
    """
    order = [(root, exclude)]
    i = 0
    while i < len(order):
        x, p = order[i]
        i += 1
        for y, _ in t.adjacency[x]:
            if y != p:
                order.append((y, x))
    codes: dict[int, list[str]] = {x: [] for x, _ in order}
    out = ""
    for x, p in reversed(order):
        kids = codes.pop(x)
        kids.sort()
        out = "(" + "".join(kids) + ")"
        if x != root:
            codes[p].append(out)
    return out


def edge_rooted_code(t: Tree, eid: int) -> tuple[str, str]:
    e = t.edges[eid]
    a, b = rooted_code(t, e.u, e.v), rooted_code(t, e.v, e.u)
    return (a, b) if a <= b else (b, a)


def edge_orbits(t: Tree) -> list[tuple[int, ...]]:
    """Partition of edge ids into automorphism orbits, ordered by smallest member.

    Two edges are equivalent iff the tree rooted at one edge is isomorphic to
    the tree rooted at the other.
    """
    groups: dict[tuple[str, str], list[int]] = {}
    for e in t.edges:
        groups.setdefault(edge_rooted_code(t, e.id), []).append(e.id)
    return sorted(tuple(g) for g in groups.values())
