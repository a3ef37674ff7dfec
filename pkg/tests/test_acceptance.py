"""The nine acceptance criteria, each with its own wall-clock budget.

Every criterion prints one ``CRITERION n name: PASS|FAIL`` line; the lines
are collected again in the terminal summary.
"""

import time

import pytest

from vmtk.corpus import DEFAULT_SEED
from vmtk.report import Report
from vmtk.verify import (
    suite_explicit,
    suite_blocks,
    suite_counting,
    suite_decomposition,
    suite_excluded,
    suite_layouts,
    suite_o1,
    suite_orbits,
    suite_properties,
    suite_treelocal,
)


def combined(title, *reports):
    rep = Report(title)
    for r in reports:
        rep.extend(r, prefix=f"{r.title}:")
    return rep


CRITERIA = [
    (1, "o1-reproduction", 1, lambda: suite_o1()),
    (2, "excluded-vertex-minors", 300, lambda: combined("excluded", *(suite_excluded(k) for k in range(3)))),
    (3, "counting", 120, lambda: suite_counting()),
    (4, "constructive-layouts", 60, lambda: suite_layouts(DEFAULT_SEED)),
    (
        5,
        "canonical-decompositions",
        180,
        lambda: combined(
            "canonical", suite_explicit(1), suite_explicit(2), suite_decomposition(DEFAULT_SEED)
        ),
    ),
    (6, "block-characterizations", 120, lambda: suite_blocks(DEFAULT_SEED)),
    (7, "tree-local-equivalence", 180, lambda: suite_treelocal()),
    (8, "property-suites", 240, lambda: suite_properties(DEFAULT_SEED)),
    (9, "orbit-bounds", 120, lambda: suite_orbits()),
]


@pytest.mark.parametrize("number,name,budget,run", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, name, budget, run, acceptance_log):
    started = time.perf_counter()
    rep = run()
    elapsed = time.perf_counter() - started
    ok = rep.ok and elapsed < budget and len(rep.checks) > 0
    line = f"CRITERION {number} {name}: {'PASS' if ok else 'FAIL'}"
    acceptance_log.append(line)
    print(line)
    print(f"  {rep.summary()} in {elapsed:.1f}s (budget {budget}s)")
    for check in rep.failures[:20]:
        print("  " + check.line())
    assert rep.checks, "criterion ran no checks"
    assert rep.ok, f"{len(rep.failures)} failing checks"
    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
