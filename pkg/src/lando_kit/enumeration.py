"""Free trees: canonical forms, exhaustive generation, named fixtures."""

from __future__ import annotations

import heapq
from typing import Iterator

import networkx as nx

from .errors import InvalidParameterError
from .tree_core import Tree, build_tree, centroids, rooted_code


def canonical_form(t: Tree) -> str:
    """Isomorphism invariant string; equal iff the trees are isomorphic.

    ``C`` + the AHU code rooted at the centroid, or ``B`` + the sorted AHU
    codes of the two halves when the tree is bicentral.
    """
    cs = centroids(t)
    if len(cs) == 1:
        return "C" + rooted_code(t, cs[0])
    a, b = rooted_code(t, cs[0], cs[1]), rooted_code(t, cs[1], cs[0])
    return "B" + min(a, b) + max(a, b)


def _split_balanced(code: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(code):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            return code[: i + 1], code[i + 1 :]
    raise ValueError(f"unbalanced code {code!r}")


def _build_rooted(code: str, first_vertex: int) -> list[tuple[int, int]]:
    """Pre-order (parent, child) pairs of a rooted AHU code; root gets ``first_vertex``."""
    pairs: list[tuple[int, int]] = []
    stack: list[int] = []
    nxt = first_vertex
    for ch in code:
        if ch == "(":
            if stack:
                pairs.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return pairs


def tree_from_canonical(form: str) -> Tree:
    """Rebuild the tree of a canonical form with canonical vertex and edge order.

    Vertex 0 is the centroid.  For bicentral trees the central edge is
    ``e0`` and the first half is numbered before the second.  Edge labels
    are ``e0..e{k-1}``.
    """
    kind, body = form[0], form[1:]
    if kind == "C":
        pairs = _build_rooted(body, 0)
    elif kind == "B":
        a, b = _split_balanced(body)
        size_a = a.count("(")
        pairs = [(0, size_a)] + _build_rooted(a, 0) + _build_rooted(b, size_a)
    else:
        raise ValueError(f"not a canonical form: {form!r}")
    if not pairs:
        return Tree(1, ())
    return build_tree([(u, v, f"e{i}") for i, (u, v) in enumerate(pairs)])


def enumerate_free_trees(k_edges: int) -> Iterator[Tree]:
    """Yield one tree per isomorphism class with ``k_edges`` edges, sorted by canonical form."""
    if k_edges < 0:
        raise InvalidParameterError(f"k_edges must be >= 0, got {k_edges}")
    if k_edges == 0:
        yield Tree(1, ())
        return
    forms = sorted(
        canonical_form(build_tree([(u, v, f"e{i}") for i, (u, v) in enumerate(g.edges())]))
        for g in nx.nonisomorphic_trees(k_edges + 1)
    )
    for f in forms:
        yield tree_from_canonical(f)


def _partitions(total: int, max_part: int, max_len: int) -> Iterator[list[int]]:
    if total == 0:
        yield []
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            yield [first] + rest


def _multiset_permutations(counts: list[int]) -> Iterator[list[int]]:
    length = sum(counts)
    seq: list[int] = []

    def rec() -> Iterator[list[int]]:
        if len(seq) == length:
            yield list(seq)
            return
        for sym, c in enumerate(counts):
            if c:
                counts[sym] -= 1
                seq.append(sym)
                yield from rec()
                seq.pop()
                counts[sym] += 1

    yield from rec()


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def prufer_free_tree_forms(k_edges: int) -> list[str]:
    """Canonical forms of all free trees with ``k_edges`` edges, via Prüfer decoding.

    Only sequences whose per-vertex multiplicities are non-increasing in the
    vertex id are decoded.  Every tree can be relabeled so its degrees are
    non-increasing in the id, so every isomorphism class is still hit.
    """
    if k_edges < 0:
        raise InvalidParameterError(f"k_edges must be >= 0, got {k_edges}")
    if k_edges == 0:
        return ["C()"]
    n = k_edges + 1
    if n == 2:
        return [canonical_form(build_tree([(0, 1, "e0")]))]
    forms = set()
    for part in _partitions(n - 2, n - 2, n):
        counts = part + [0] * (n - len(part))
        for seq in _multiset_permutations(counts):
            edges = prufer_decode(seq, n)
            forms.add(canonical_form(build_tree([(u, v, f"e{i}") for i, (u, v) in enumerate(edges)])))
    return sorted(forms)


def _check_positive(**params: int) -> None:
    for name, val in params.items():
        if not isinstance(val, int) or val < 1:
            raise InvalidParameterError(f"{name} must be a positive integer, got {val!r}")


def path_tree(k: int) -> Tree:
    """Vertices 0..k in a row; edge ``e{i}`` joins i and i+1."""
    _check_positive(k=k)
    return build_tree([(i, i + 1, f"e{i}") for i in range(k)])


def star_tree(k: int) -> Tree:
    """Center 0 with leaves 1..k; edge ``e{i}`` joins 0 and i+1."""
    _check_positive(k=k)
    return build_tree([(0, i + 1, f"e{i}") for i in range(k)])


def double_star(a: int, b: int) -> Tree:
    """Adjacent centers 0 and 1 (edge ``e0``), ``a`` leaves on 0 then ``b`` leaves on 1."""
    _check_positive(a=a, b=b)
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return build_tree([(u, v, f"e{i}") for i, (u, v) in enumerate(edges)])


def spider(l1: int, l2: int, l3: int) -> Tree:
    """Three paths of lengths l1, l2, l3 glued at center 0, numbered leg by leg outward."""
    _check_positive(l1=l1, l2=l2, l3=l3)
    edges = []
    nxt = 1
    for length in (l1, l2, l3):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return build_tree([(u, v, f"e{i}") for i, (u, v) in enumerate(edges)])
