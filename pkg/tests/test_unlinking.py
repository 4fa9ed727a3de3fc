from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lando_kit.enumeration import enumerate_free_trees
from lando_kit.unlinking import on_one_side, unlinked, unlinked_oracle

from conftest import trees_up_to


def test_on_one_side_examples(p3):
    # parities for q={e0,e2} are (0,1,1,0); e1 joins vertices 1 and 2
    assert on_one_side(p3, {1}, {0, 2})
    # parities for q={e1} are (0,0,1,1); e0 sits at parity 0, e2 at parity 1
    assert not on_one_side(p3, {0, 2}, {1})


def test_one_sidedness_is_not_symmetric(p3):
    assert on_one_side(p3, {1}, {0, 2}) and not on_one_side(p3, {0, 2}, {1})


def test_unlinked_examples(p3, p5):
    assert not unlinked(p3, {1}, {0, 2})
    assert unlinked(p3, {0}, {2})
    assert unlinked(p5, {0, 2}, {4})
    assert not unlinked(p5, {0, 2}, {1})


def test_non_transitivity_witness(p5):
    p, q, r = {0, 2}, {4}, {1}
    assert unlinked(p5, p, q) and unlinked(p5, q, r) and not unlinked(p5, p, r)
    assert unlinked_oracle(p5, p, q) and unlinked_oracle(p5, q, r) and not unlinked_oracle(p5, p, r)


@pytest.mark.parametrize(
    "p, q, expected", [({1}, {0, 2}, False), ({0}, {2}, True), ({0, 2}, {1}, False)]
)
def test_oracle_examples(p3, p, q, expected):
    assert unlinked_oracle(p3, p, q) is expected
    assert unlinked(p3, p, q) is expected


def test_empty_set_always_unlinked():
    for t in trees_up_to(5):
        for mask in range(1 << t.edge_count):
            q = {i for i in range(t.edge_count) if mask >> i & 1}
            assert on_one_side(t, set(), q)
            assert unlinked(t, set(), q) and unlinked(t, q, set())


def test_intersecting_sets_are_never_on_one_side():
    for t in trees_up_to(5):
        k = t.edge_count
        for pm, qm in itertools.product(range(1 << k), repeat=2):
            if pm & qm:
                p = {i for i in range(k) if pm >> i & 1}
                q = {i for i in range(k) if qm >> i & 1}
                assert not on_one_side(t, p, q)
                assert not unlinked_oracle(t, p, q)


def test_oracle_equivalence_and_symmetry_exhaustive():
    # every edge goes to p, q or neither: 3^k disjoint assignments per tree
    for t in trees_up_to(5):
        k = t.edge_count
        for assign in itertools.product(range(3), repeat=k):
            p = {i for i, a in enumerate(assign) if a == 1}
            q = {i for i, a in enumerate(assign) if a == 2}
            fast = unlinked(t, p, q)
            assert fast == unlinked_oracle(t, p, q)
            assert fast == unlinked(t, q, p)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_oracle_equivalence_random_overlapping(data):
    k = data.draw(st.integers(min_value=1, max_value=10))
    trees = list(enumerate_free_trees(k))
    t = trees[data.draw(st.integers(min_value=0, max_value=len(trees) - 1))]
    p = data.draw(st.sets(st.integers(min_value=0, max_value=k - 1)))
    q = data.draw(st.sets(st.integers(min_value=0, max_value=k - 1)))
    assert unlinked(t, p, q) == unlinked_oracle(t, p, q)
