"""Text formats: circle-nesting diagrams, tree files, JSON, DOT, bijections.

Diagram grammar (ASCII whitespace ignored)::

    diagram     := circle_list
    circle_list := circle (',' circle)*
    circle      := LABEL '(' circle_list? ')'
    LABEL       := [A-Za-z0-9_]+

Tree file::

    tree
    U -- V : LABEL      # one edge per line, vertex names are local tokens
    vertex V            # optional; needed for the 0-edge tree
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    DiagramSyntaxError,
    DuplicateAssignmentError,
    DuplicateLabelError,
    EmptyInputError,
    EmptyTreeNeedsVertexLineError,
    InvalidBijectionError,
    LandoError,
    MissingAssignmentError,
    SizeMismatchError,
    UnknownLabelError,
)
from .tree_core import Tree, bicolor, build_tree

_WS = " \t\r\n\f\v"
_LABEL_CHARS = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_")
_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class CircleNode:
    label: str
    children: tuple[CircleNode, ...] = ()


@dataclass(frozen=True)
class CircleDiagram:
    roots: tuple[CircleNode, ...]

    def circles(self) -> list[CircleNode]:
        """All circles in pre-order."""
        out: list[CircleNode] = []
        stack = list(reversed(self.roots))
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(reversed(node.children))
        return out


class _DiagramParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, expected: str) -> DiagramSyntaxError:
        got = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        return DiagramSyntaxError(
            f"at position {self.pos}: expected {expected}, got {got}", self.pos, expected
        )

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.fail(repr(ch))
        self.pos += 1

    def label(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _LABEL_CHARS:
            self.pos += 1
        if self.pos == start:
            raise self.fail("a label [A-Za-z0-9_]+")
        return self.text[start:self.pos]

    def circle(self) -> CircleNode:
        lab = self.label()
        self.expect("(")
        kids: tuple[CircleNode, ...] = ()
        if self.peek() != ")":
            kids = self.circle_list()
        self.expect(")")
        return CircleNode(lab, kids)

    def circle_list(self) -> tuple[CircleNode, ...]:
        items = [self.circle()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.circle())
        return tuple(items)


def parse_diagram(text: str) -> CircleDiagram:
    parser = _DiagramParser(text)
    if parser.peek() == "":
        raise EmptyInputError("empty diagram; write the 0-edge tree as a tree file with a 'vertex' line")
    roots = parser.circle_list()
    if parser.peek() != "":
        raise parser.fail("',' or end of input")
    d = CircleDiagram(roots)
    seen: set[str] = set()
    for node in d.circles():
        if node.label in seen:
            raise DuplicateLabelError(f"circle label {node.label!r} used twice")
        seen.add(node.label)
    return d


def diagram_to_tree(d: CircleDiagram) -> Tree:
    """Dual tree: vertex 0 is the outer region, each circle adds an edge to its interior.

    Vertices and edges are numbered in pre-order of the circles.
    """
    edges: list[tuple[int, int, str]] = []
    stack = [(node, 0) for node in reversed(d.roots)]
    while stack:
        node, region = stack.pop()
        inside = len(edges) + 1
        edges.append((region, inside, node.label))
        stack.extend((kid, inside) for kid in reversed(node.children))
    return build_tree(edges)


def tree_to_diagram(t: Tree, outer: int = 0) -> CircleDiagram:
    """Nesting diagram whose dual tree is ``t``, taking ``outer`` as the outer region."""
    if t.edge_count == 0:
        raise EmptyInputError("the 0-edge tree has no diagram form")

    def build(v: int, parent: int) -> tuple[CircleNode, ...]:
        return tuple(
            CircleNode(t.edges[eid].label, build(w, v)) for w, eid in t.adjacency[v] if w != parent
        )

    return CircleDiagram(build(outer, -1))


def format_diagram(d: CircleDiagram) -> str:
    def fmt(nodes: tuple[CircleNode, ...]) -> str:
        return ",".join(f"{n.label}({fmt(n.children)})" for n in nodes)

    return fmt(d.roots)


def parse_tree_file(text: str) -> Tree:
    lines = [(i, raw.split("#", 1)[0].strip()) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, s) for i, s in lines if s]
    if not lines:
        raise EmptyInputError("empty tree file")
    first_no, first = lines[0]
    if first != "tree":
        raise DiagramSyntaxError(f"line {first_no}: expected header 'tree'", first_no, "'tree'")

    ids: dict[str, int] = {}

    def vid(name: str, lineno: int) -> int:
        if not _TOKEN_RE.match(name):
            raise DiagramSyntaxError(f"line {lineno}: bad vertex name {name!r}", lineno, "vertex name")
        return ids.setdefault(name, len(ids))

    edges: list[tuple[int, int, str]] = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) == 2 and parts[0] == "vertex":
            vid(parts[1], lineno)
            continue
        m = re.fullmatch(r"(\S+)\s*--\s*(\S+)\s*:\s*(\S+)", line)
        if not m:
            raise DiagramSyntaxError(
                f"line {lineno}: expected 'U -- V : LABEL' or 'vertex V', got {line!r}",
                lineno,
                "'U -- V : LABEL'",
            )
        u, v = vid(m.group(1), lineno), vid(m.group(2), lineno)
        edges.append((u, v, m.group(3)))
    if not edges and not ids:
        raise EmptyTreeNeedsVertexLineError(
            "tree without edges needs a 'vertex V' line", first_no, "'vertex V'"
        )
    return build_tree(edges, vertex_count=len(ids))


def format_tree_file(t: Tree) -> str:
    lines = ["tree"]
    if t.edge_count == 0:
        lines.append("vertex v0")
    lines += [f"v{e.u} -- v{e.v} : {e.label}" for e in t.edges]
    return "\n".join(lines) + "\n"


def to_json(t: Tree) -> str:
    doc = {
        "vertex_count": t.vertex_count,
        "edges": [{"id": e.id, "u": e.u, "v": e.v, "label": e.label} for e in t.edges],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_json(text: str) -> Tree:
    try:
        doc = json.loads(text)
        edges = sorted(doc["edges"], key=lambda e: e["id"])
        if [e["id"] for e in edges] != list(range(len(edges))):
            raise LandoError("edge ids must be 0..k-1")
        return build_tree([(e["u"], e["v"], e["label"]) for e in edges], doc["vertex_count"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DiagramSyntaxError(f"bad tree JSON: {exc}") from exc


def to_dot(t: Tree, name: str = "T") -> str:
    color = bicolor(t)
    out = [f"graph {name} {{", "  node [style=filled];"]
    out += [f'  {v} [fillcolor="{"gray" if color[v] else "white"}"];' for v in range(t.vertex_count)]
    out += [f'  {e.u} -- {e.v} [label="{e.label}"];' for e in t.edges]
    out.append("}")
    return "\n".join(out) + "\n"


def load_tree(text: str) -> Tree:
    """Parse any supported tree encoding: tree file, JSON, or diagram."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json(text)
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            if line == "tree":
                return parse_tree_file(text)
            break
    return diagram_to_tree(parse_diagram(text))


@dataclass(frozen=True)
class Bijection:
    """Edge-label map from one tree onto another (``h`` on circles)."""

    forward: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "forward", dict(self.forward))

    def __hash__(self) -> int:
        return hash(frozenset(self.forward.items()))

    def inverse(self) -> Bijection:
        return Bijection({v: k for k, v in self.forward.items()})

    def to_text(self) -> str:
        return ",".join(f"{a}={b}" for a, b in self.forward.items())

    def to_perm(self, g: Tree, h: Tree) -> tuple[int, ...]:
        """Target edge id for each source edge id; validates against both trees."""
        if g.edge_count != h.edge_count:
            raise SizeMismatchError(f"trees have {g.edge_count} and {h.edge_count} edges")
        perm = []
        for e in g.edges:
            target = self.forward.get(e.label)
            if target is None or target not in h.label_index:
                raise InvalidBijectionError(f"source edge {e.label!r} has no valid image")
            perm.append(h.label_index[target])
        if len(set(perm)) != len(perm) or len(self.forward) != g.edge_count:
            raise InvalidBijectionError("map is not a bijection between the edge sets")
        return tuple(perm)

    @classmethod
    def from_perm(cls, g: Tree, h: Tree, perm: tuple[int, ...]) -> Bijection:
        return cls({e.label: h.edges[perm[e.id]].label for e in g.edges})

    @classmethod
    def identity(cls, t: Tree) -> Bijection:
        return cls({lab: lab for lab in t.labels})


def parse_bijection(text: str, g: Tree, h: Tree) -> Bijection:
    """Parse ``a=x,b=y,...`` and check it is a bijection from g's labels onto h's."""
    if g.edge_count != h.edge_count:
        raise SizeMismatchError(f"trees have {g.edge_count} and {h.edge_count} edges")
    forward: dict[str, str] = {}
    used: dict[str, str] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        src, sep, dst = (s.strip() for s in item.partition("="))
        if not sep or not src or not dst:
            raise DiagramSyntaxError(f"bad assignment {item!r}; expected gLabel=hLabel", expected="gLabel=hLabel")
        if src not in g.label_index:
            raise UnknownLabelError(f"{src!r} is not an edge of the source tree")
        if dst not in h.label_index:
            raise UnknownLabelError(f"{dst!r} is not an edge of the target tree")
        if src in forward:
            raise DuplicateAssignmentError(f"source {src!r} assigned twice")
        if dst in used:
            raise DuplicateAssignmentError(f"target {dst!r} assigned from both {used[dst]!r} and {src!r}")
        forward[src] = dst
        used[dst] = src
    missing = [lab for lab in g.labels if lab not in forward]
    if missing:
        raise MissingAssignmentError(f"no image for {', '.join(missing)}")
    return Bijection({lab: forward[lab] for lab in g.labels})
