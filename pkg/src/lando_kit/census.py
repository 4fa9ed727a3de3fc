"""Exhaustive sweeps over free trees: all pairs (census) and trees vs paths (problem2)."""

from __future__ import annotations

import csv
import io
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, TextIO

from .enumeration import canonical_form, enumerate_free_trees, path_tree, tree_from_canonical
from .realizability import decide_lando

CENSUS_COLUMNS = ("canonical_g", "canonical_h", "realizable", "witness_or_empty", "nodes", "millis")
PROBLEM2_COLUMNS = ("k", "canonical_g", "realizable", "witness_or_empty", "nodes", "millis")


@dataclass(frozen=True)
class Outcome:
    realizable: bool
    witness: str
    nodes: int
    millis: float


def _decide_forms(forms: tuple[str, str]) -> Outcome:
    g, h = (tree_from_canonical(f) for f in forms)
    report = decide_lando(g, h)
    return Outcome(
        report.found,
        report.result.to_text() if report.result is not None else "",
        report.nodes_explored,
        report.elapsed * 1000.0,
    )


def _run(tasks: list[tuple[str, str]], jobs: int) -> Iterator[Outcome]:
    if jobs <= 1:
        yield from map(_decide_forms, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_decide_forms, tasks, chunksize=max(1, len(tasks) // (jobs * 8)))


def census_pairs(max_edges: int) -> list[tuple[int, str, str]]:
    """Unordered pairs (i <= j in enumeration order) of free trees, for k = 0..max_edges."""
    out = []
    for k in range(max_edges + 1):
        forms = [canonical_form(t) for t in enumerate_free_trees(k)]
        out += [(k, forms[i], forms[j]) for i in range(len(forms)) for j in range(i, len(forms))]
    return out


def _write(
    out: TextIO,
    header: Iterable[str],
    rows: Iterable[list[object]],
) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _millis(o: Outcome, timing: bool) -> str:
    return f"{o.millis:.3f}" if timing else ""


def run_census(
    max_edges: int,
    out: TextIO,
    jobs: int = 1,
    timing: bool = False,
    progress: Callable[[str], None] | None = None,
) -> list[tuple[str, str]]:
    """Write census rows; return the non-realizable pairs.

    The ``millis`` column stays empty unless ``timing`` is set, keeping the
    default output byte-stable.
    """
    pairs = census_pairs(max_edges)
    tasks = [(g, h) for _, g, h in pairs]
    negatives = []
    rows = []
    last_k = -1
    for (k, g, h), o in zip(pairs, _run(tasks, jobs)):
        if progress and k != last_k:
            progress(f"census: k={k}")
            last_k = k
        if not o.realizable:
            negatives.append((g, h))
        rows.append([g, h, "yes" if o.realizable else "no", o.witness, o.nodes, _millis(o, timing)])
    _write(out, CENSUS_COLUMNS, rows)
    return negatives


def run_problem2(
    max_edges: int,
    out: TextIO,
    jobs: int = 1,
    timing: bool = False,
    progress: Callable[[str], None] | None = None,
) -> list[tuple[int, str]]:
    """Decide every free tree with 1..max_edges edges against the path of the same size.

    Returns the trees with no realizing bijection onto the path.
    """
    items = []
    for k in range(1, max_edges + 1):
        path_form = canonical_form(path_tree(k))
        items += [(k, canonical_form(t), path_form) for t in enumerate_free_trees(k)]
    rows = []
    negatives = []
    last_k = -1
    for (k, g, _), o in zip(items, _run([(g, p) for _, g, p in items], jobs)):
        if progress and k != last_k:
            progress(f"problem2: k={k}")
            last_k = k
        if not o.realizable:
            negatives.append((k, g))
        rows.append([k, g, "yes" if o.realizable else "no", o.witness, o.nodes, _millis(o, timing)])
    _write(out, PROBLEM2_COLUMNS, rows)
    return negatives


def census_text(max_edges: int, jobs: int = 1) -> str:
    buf = io.StringIO()
    run_census(max_edges, buf, jobs=jobs)
    return buf.getvalue()


def stderr_progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)
