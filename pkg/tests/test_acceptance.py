"""Exit criteria.  Each test records one PASS/FAIL line, shown in the terminal summary."""

from __future__ import annotations

import csv
import io
import itertools
import time
import timeit

from lando_kit.census import run_census, run_problem2
from lando_kit.cli import main
from lando_kit.diagram_io import Bijection, format_tree_file
from lando_kit.enumeration import (
    canonical_form,
    double_star,
    enumerate_free_trees,
    path_tree,
    prufer_free_tree_forms,
    spider,
)
from lando_kit.realizability import brute_force_find, decide_lando, find_realizing, is_realizing
from lando_kit.unlinking import unlinked, unlinked_oracle

from conftest import record_criterion, trees_up_to


def check(name: str, ok: bool, detail: str) -> None:
    record_criterion(name, ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail


def test_01_example_one(tmp_path, capsys):
    path = tmp_path / "p3.tree"
    path.write_text(format_tree_file(path_tree(3)))
    argv = ["check", "--g", str(path), "--h", str(path), "--bijection", "e0=e1,e1=e0,e2=e2"]
    times, codes = [], []
    for _ in range(5):
        start = time.perf_counter()
        codes.append(main(argv))
        times.append(time.perf_counter() - start)
    out = capsys.readouterr().out
    best = min(times) * 1000
    check(
        "1 Example 1 not realizable",
        set(codes) == {1} and "violation" in out and best < 10,
        f"exit={codes[0]} best={best:.2f}ms (<10ms)",
    )


def test_02_theorem_one():
    g, h = double_star(4, 4), spider(3, 3, 3)
    brute = brute_force_find(g, h)
    pruned = find_realizing(g, h)
    ok = (
        not brute.found
        and brute.nodes_explored == 362880
        and not pruned.found
        and pruned.nodes_explored < brute.nodes_explored
        and brute.elapsed < 10
        and pruned.elapsed < 1
    )
    check(
        "2 Theorem 1 counterexample",
        ok,
        f"brute none after {brute.nodes_explored} in {brute.elapsed:.2f}s (<10s); "
        f"pruned none after {pruned.nodes_explored} in {pruned.elapsed:.3f}s (<1s)",
    )


def test_03_positive_control():
    start = time.perf_counter()
    trees = trees_up_to(8)
    failures = []
    for t in trees:
        report = decide_lando(t, t)
        if not (report.found and is_realizing(t, t, report.result).realizing):
            failures.append(canonical_form(t))
        if not is_realizing(t, t, Bijection.identity(t)).realizing:
            failures.append(canonical_form(t))
    elapsed = time.perf_counter() - start
    check(
        "3 every tree realizable against itself (<=8 edges)",
        not failures and elapsed < 30,
        f"{len(trees)} trees, {len(failures)} failures, {elapsed:.2f}s (<30s)",
    )


def test_04_oracle_equivalence():
    start = time.perf_counter()
    cases = mismatches = 0
    for t in trees_up_to(6):
        for assign in itertools.product(range(3), repeat=t.edge_count):
            p = {i for i, a in enumerate(assign) if a == 1}
            q = {i for i, a in enumerate(assign) if a == 2}
            cases += 1
            mismatches += unlinked(t, p, q) != unlinked_oracle(t, p, q)
    elapsed = time.perf_counter() - start
    check(
        "4 unlinked == unlinked_oracle (<=6 edges, 3^k assignments)",
        mismatches == 0 and elapsed < 60,
        f"{cases} cases, {mismatches} mismatches, {elapsed:.2f}s (<60s)",
    )


def test_05_search_equivalence():
    start = time.perf_counter()
    pairs = disagreements = 0
    for k in range(6):
        trees = list(enumerate_free_trees(k))
        for g, h in itertools.product(trees, repeat=2):
            pairs += 1
            disagreements += find_realizing(g, h).found != brute_force_find(g, h).found
    elapsed = time.perf_counter() - start
    check(
        "5 pruned and brute force agree (<=5 edges, ordered pairs)",
        disagreements == 0 and elapsed < 60,
        f"{pairs} pairs, {disagreements} disagreements, {elapsed:.2f}s (<60s)",
    )


def test_06_symmetry_suite():
    pairs = asym = inverse_bad = bijections = 0
    for k in range(6):
        trees = list(enumerate_free_trees(k))
        for g, h in itertools.product(trees, repeat=2):
            pairs += 1
            asym += decide_lando(g, h).found != decide_lando(h, g).found
            for perm in itertools.permutations(range(k)):
                bij = Bijection.from_perm(g, h, perm)
                bijections += 1
                inverse_bad += is_realizing(g, h, bij).realizing != is_realizing(h, g, bij.inverse()).realizing
    check(
        "6 existence and inverse symmetry (<=5 edges)",
        asym == 0 and inverse_bad == 0,
        f"{pairs} pairs ({asym} asymmetric), {bijections} bijections ({inverse_bad} inverse mismatches)",
    )


def test_07_enumeration_counts():
    start = time.perf_counter()
    expected = [1, 1, 2, 3, 6, 11, 23, 47, 106]
    got, oracle_ok = [], True
    for k in range(1, 10):
        forms = [canonical_form(t) for t in enumerate_free_trees(k)]
        got.append(len(forms))
        oracle_ok &= forms == prufer_free_tree_forms(k)
    elapsed = time.perf_counter() - start
    check(
        "7 free tree counts k=1..9 with Pruefer cross-check",
        got == expected and oracle_ok and elapsed < 300,
        f"counts={got} oracle_match={oracle_ok} {elapsed:.1f}s (<300s)",
    )


def test_08_complexity():
    times = []
    for k in (100, 200, 400):
        t = path_tree(k)
        ident = Bijection.identity(t)
        assert is_realizing(t, t, ident).realizing
        times.append(min(timeit.repeat(lambda: is_realizing(t, t, ident), number=3, repeat=5)) / 3)
    ratios = [b / a for a, b in zip(times, times[1:])]
    check(
        "8 is_realizing scales at most quadratically",
        all(r <= 5 for r in ratios),
        "times=" + ",".join(f"{x * 1000:.2f}ms" for x in times) + " ratios=" + ",".join(f"{r:.2f}" for r in ratios) + " (<=5)",
    )


def test_09_determinism(tmp_path, capsys):
    outputs = []
    for i, jobs in enumerate([1, 1, 1, 4]):
        target = tmp_path / f"census{i}.csv"
        assert main(["census", "--max-edges", "6", "--out", str(target), "--jobs", str(jobs)]) == 0
        outputs.append(target.read_bytes())
    capsys.readouterr()
    check(
        "9 census K=6 byte-identical across runs and --jobs",
        len(set(outputs)) == 1,
        f"{len(outputs)} runs (jobs 1,1,1,4), {len(set(outputs))} distinct output(s), {len(outputs[0])} bytes",
    )


def test_10_census_and_problem2():
    start = time.perf_counter()
    buf = io.StringIO()
    run_census(9, buf)
    census_s = time.perf_counter() - start
    want = {canonical_form(double_star(4, 4)), canonical_form(spider(3, 3, 3))}
    hits = [
        r for r in csv.DictReader(io.StringIO(buf.getvalue()))
        if {r["canonical_g"], r["canonical_h"]} == want
    ]
    row_ok = len(hits) == 1 and hits[0]["realizable"] == "no"

    start = time.perf_counter()
    first, second = io.StringIO(), io.StringIO()
    negatives = run_problem2(9, first)
    problem2_s = time.perf_counter() - start
    run_problem2(9, second)
    check(
        "10 K=9 census has the Theorem 1 row; problem2 K=9 deterministic",
        row_ok and problem2_s < 1800 and first.getvalue() == second.getvalue(),
        f"row={'no' if row_ok else 'missing/wrong'} census {census_s:.1f}s; "
        f"problem2 {problem2_s:.1f}s (<1800s), {len(negatives)} negative tree(s), deterministic={first.getvalue() == second.getvalue()}",
    )
