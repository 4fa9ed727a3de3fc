"""Realizing bijections between the edge sets of two trees.

A bijection ``h`` from the edges of ``g`` to the edges of ``h_tree`` is
realizing when, for every two distinct same-colored vertices A, B of ``g``,
the images of their incident edge sets are unlinked in ``h_tree``.  By the
realizability criterion for circle systems this is exactly when two spheres
with the given intersection pattern exist.

Kernel
------
Vertex sets of ``h_tree`` are Python ints used as bitsets.  For each target
edge ``j`` we keep ``cut[j]`` (vertices on the far side of ``j`` from vertex
0) and ``ends[j]`` (its two endpoints).  The parity table of an edge set is
the XOR of its cuts, and ``p`` is on one side of ``q`` iff
``ends(p) & odd(q)`` is either empty or all of ``ends(p)``.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .diagram_io import Bijection
from .errors import SizeMismatchError
from .tree_core import Tree, bfs_order, bicolor, centroids, edge_orbits


@dataclass(frozen=True)
class Violation:
    """Same-colored vertices ``a < b`` of the source tree whose images are linked.

    ``failed_direction = (x, y)`` means the image of the edges at ``x`` is
    not on one side of the image of the edges at ``y``.
    """

    a: int
    b: int
    failed_direction: tuple[int, int]


@dataclass(frozen=True)
class Verdict:
    violation: Violation | None = None

    @property
    def realizing(self) -> bool:
        return self.violation is None


@dataclass(frozen=True)
class SearchReport:
    result: Bijection | None
    nodes_explored: int
    strategy: str
    elapsed: float
    realizing_count: int | None = None

    @property
    def found(self) -> bool:
        return self.result is not None


def _cut_masks(t: Tree) -> tuple[list[int], list[int]]:
    sub = [1 << v for v in range(t.vertex_count)]
    cut = [0] * t.edge_count
    for v, p, eid in reversed(bfs_order(t)):
        if p >= 0:
            sub[p] |= sub[v]
            cut[eid] = sub[v]
    ends = [(1 << e.u) | (1 << e.v) for e in t.edges]
    return cut, ends


class _Checker:
    """Precomputed data for testing many bijections between one pair of trees."""

    def __init__(self, g: Tree, h_tree: Tree):
        if g.edge_count != h_tree.edge_count:
            raise SizeMismatchError(f"trees have {g.edge_count} and {h_tree.edge_count} edges")
        self.g = g
        self.h_tree = h_tree
        self.n = g.vertex_count
        self.color = bicolor(g)
        self.incident = [tuple(eid for _, eid in g.adjacency[v]) for v in range(self.n)]
        self.cut, self.ends = _cut_masks(h_tree)
        self.pairs = [
            (a, b)
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if self.color[a] == self.color[b]
        ]

    def image(self, v: int, perm: Sequence[int]) -> tuple[int, int]:
        odd = ends = 0
        cut, emask = self.cut, self.ends
        for eid in self.incident[v]:
            j = perm[eid]
            odd ^= cut[j]
            ends |= emask[j]
        return odd, ends

    def first_violation(self, perm: Sequence[int]) -> Violation | None:
        odd: list[int | None] = [None] * self.n
        ends = [0] * self.n
        for a, b in self.pairs:
            oa = odd[a]
            if oa is None:
                oa, ends[a] = self.image(a, perm)
                odd[a] = oa
            ob = odd[b]
            if ob is None:
                ob, ends[b] = self.image(b, perm)
                odd[b] = ob
            ea, eb = ends[a], ends[b]
            x = ea & ob
            if x and x != ea:
                return Violation(a, b, (a, b))
            x = eb & oa
            if x and x != eb:
                return Violation(a, b, (b, a))
        return None


def is_realizing(g: Tree, h_tree: Tree, h: Bijection) -> Verdict:
    """Check ``h`` in O(k^2); report the first failing pair in lexicographic order."""
    perm = h.to_perm(g, h_tree)
    return Verdict(_Checker(g, h_tree).first_violation(perm))


def brute_force_find(g: Tree, h_tree: Tree, count_all: bool = False) -> SearchReport:
    """Try all k! bijections, target labels permuted in lexicographic order.

    Returns the first realizing one, or with ``count_all`` keeps going and
    records how many there are (the witness is still the first).
    """
    start = time.perf_counter()
    checker = _Checker(g, h_tree)
    targets = sorted(range(h_tree.edge_count), key=lambda j: h_tree.edges[j].label)
    nodes = 0
    count = 0
    witness = None
    first_violation = checker.first_violation
    for perm in itertools.permutations(targets):
        nodes += 1
        if first_violation(perm) is None:
            count += 1
            if witness is None:
                witness = perm
                if not count_all:
                    break
    return SearchReport(
        Bijection.from_perm(g, h_tree, witness) if witness is not None else None,
        nodes,
        "brute",
        time.perf_counter() - start,
        count if count_all else None,
    )


class _PrunedSearch:
    """Backtracking over source edges in BFS order from the source centroid.

    A same-colored pair is checked once both of its incident sets are fully
    assigned; the completion schedule is static so it is precomputed.
    """

    def __init__(self, g: Tree, h_tree: Tree):
        self.checker = _Checker(g, h_tree)
        k = g.edge_count
        self.k = k
        self.order = [eid for _, p, eid in bfs_order(g, centroids(g)[0]) if p >= 0]
        remaining = [g.degree(v) for v in range(g.vertex_count)]
        color = self.checker.color
        done: list[int] = []
        # per search depth: [(vertex, same-colored vertices completed before it)]
        self.completes: list[list[tuple[int, tuple[int, ...]]]] = []
        for eid in self.order:
            e = g.edges[eid]
            step = []
            for v in (e.u, e.v):
                remaining[v] -= 1
                if remaining[v] == 0:
                    step.append((v, tuple(w for w in done if color[w] == color[v])))
                    done.append(v)
            self.completes.append(step)
        self.nodes = 0

    def run(self, root_candidates: Sequence[int]) -> tuple[int, ...] | None:
        if self.k == 0:
            self.nodes += 1
            return ()
        perm = [-1] * self.k
        used = [False] * self.k
        odd = [0] * self.checker.n
        ends = [0] * self.checker.n
        image = self.checker.image
        order, completes, k = self.order, self.completes, self.k

        def consistent(depth: int) -> bool:
            for v, partners in completes[depth]:
                ov, ev = image(v, perm)
                odd[v], ends[v] = ov, ev
                for w in partners:
                    x = ev & odd[w]
                    if x and x != ev:
                        return False
                    ew = ends[w]
                    x = ew & ov
                    if x and x != ew:
                        return False
            return True

        def extend(depth: int) -> bool:
            eid = order[depth]
            candidates = root_candidates if depth == 0 else range(k)
            for j in candidates:
                if used[j]:
                    continue
                self.nodes += 1
                perm[eid] = j
                if consistent(depth):
                    if depth + 1 == k:
                        return True
                    used[j] = True
                    if extend(depth + 1):
                        return True
                    used[j] = False
                perm[eid] = -1
            return False

        return tuple(perm) if extend(0) else None


def _branch(g: Tree, h_tree: Tree, j: int) -> tuple[tuple[int, ...] | None, int]:
    search = _PrunedSearch(g, h_tree)
    return search.run([j]), search.nodes


def _root_candidates(h_tree: Tree, symmetry: bool) -> list[int]:
    if symmetry:
        return [orbit[0] for orbit in edge_orbits(h_tree)]
    return list(range(h_tree.edge_count))


def find_realizing(
    g: Tree, h_tree: Tree, symmetry: bool = True, jobs: int = 1
) -> SearchReport:
    """Pruned backtracking search for a realizing bijection.

    With ``symmetry`` the first assigned edge only takes one image per
    automorphism orbit of ``h_tree``.  With ``jobs > 1`` first-level branches
    run in worker processes and the witness from the lowest branch wins, so
    the answer matches the sequential run; the node count then covers every
    branch.
    """
    start = time.perf_counter()
    roots = _root_candidates(h_tree, symmetry)
    if jobs <= 1 or g.edge_count == 0:
        search = _PrunedSearch(g, h_tree)
        perm = search.run(roots)
        nodes = search.nodes
    else:
        if g.edge_count != h_tree.edge_count:
            raise SizeMismatchError(f"trees have {g.edge_count} and {h_tree.edge_count} edges")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_branch, [g] * len(roots), [h_tree] * len(roots), roots))
        nodes = sum(n for _, n in results)
        perm = next((p for p, _ in results if p is not None), None)
    return SearchReport(
        Bijection.from_perm(g, h_tree, perm) if perm is not None else None,
        nodes,
        "pruned",
        time.perf_counter() - start,
    )


def decide_lando(g: Tree, h_tree: Tree, jobs: int = 1) -> SearchReport:
    """Whether two spheres can intersect in circle systems with dual trees ``g`` and ``h_tree``."""
    return find_realizing(g, h_tree, symmetry=True, jobs=jobs)
