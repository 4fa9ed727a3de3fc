from __future__ import annotations

import itertools

import pytest

from lando_kit.enumeration import enumerate_free_trees, path_tree
from lando_kit.tree_core import Tree, bicolor, incident_edges
from lando_kit.unlinking import unlinked_oracle

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    _ACCEPTANCE.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


def reference_realizing(g: Tree, h: Tree, perm) -> bool:
    """Slow check straight from the definition, using the component-coloring oracle."""
    color = bicolor(g)
    for a, b in itertools.combinations(range(g.vertex_count), 2):
        if color[a] != color[b]:
            continue
        pa = {perm[e] for e in incident_edges(g, a)}
        pb = {perm[e] for e in incident_edges(g, b)}
        if not unlinked_oracle(h, pa, pb):
            return False
    return True


def trees_up_to(k_max: int) -> list[Tree]:
    return [t for k in range(k_max + 1) for t in enumerate_free_trees(k)]


@pytest.fixture
def p3() -> Tree:
    return path_tree(3)


@pytest.fixture
def p5() -> Tree:
    return path_tree(5)
