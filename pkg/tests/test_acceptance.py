"""Acceptance criteria run against the default suite grid.

Each criterion prints one ``ACCEPTANCE n: PASS|FAIL`` line. Run directly with
``python3 tests/test_acceptance.py`` or through pytest, where the lines are
repeated in the terminal summary.
"""
import sys
import time

import pytest

from qplab import closed_forms as cf
from qplab import harness as h
from qplab.cli import table_rows

RESULTS: list[str] = []

TABLE_SET = set(h.table_instances())


def _ids(*names):
    names = set(names)
    return lambda inst: inst.id in names and inst not in TABLE_SET


def _is_product(report):
    mode = report.mode
    return report.instance.id in PRODUCT_IDS and mode.kind == h.TRUNCATED and mode.cutoff == 30


PRODUCT_IDS = {"T1_1", "E1_GF13MOD4", "T2_3", "T2_4", "E2_PRODSILLS", "T2_5", "T2_6"}

# number, description, instance selector, time budget in seconds (None: unbounded)
CRITERIA = [
    (2, "distinct-part closed form and recurrence, bounds 0..9, i,j 0..4", _ids("T2_1", "L2_2"), 10.0),
    (3, "BG-rank identities and summations", _ids("T3_1", "T3_2", "T3_3", "C3_4", "E3_CHB"), None),
    (4, "double sums in t,z and their corollaries", _ids("T4_1", "T4_2", "C4_3a", "C4_3b", "T4_4", "T4_5"),
     None),
    (5, "four-variable generating functions", _ids("T5_1a", "T5_1b", "T5_2a", "T5_2b", "T5_3", "E5_PSI2PHI"),
     None),
    (6, "Rogers-Szego identities, extractions and alternating-sum counts",
     _ids("T5_4", "E5_RS2PSI", "E5_EXTRACT", "E5_EXTRACTPHI", "T5_6", "T5_7"), None),
    (7, "doubly bounded four-variable identities", _ids("T6_1a", "T6_1b", "T6_2", "T6_3", "E6_RESTPHI", "E6_QBIN"),
     None),
    (8, "basic hypergeometric transformations at rational points", _ids("T6_4", "E6_TRANSFORM"), 5.0),
    (9, "outlook identities", _ids("P7_1", "P7_2", "P7_3", "P7_4"), None),
    (10, "bijection round trips and invariants, norm <= 18", _ids("RHO_PROPS", "RHOSTAR_PROPS"), 60.0),
]


def record(number, ok, detail):
    line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def _judge(reports, budget):
    bad = [r for r in reports if r.status != "Pass"]
    seconds = sum(r.elapsed_ms for r in reports) / 1000
    detail = f"({len(reports)} instances, {len(bad)} not passing, {seconds:.2f}s)"
    if bad:
        first = bad[0]
        detail += f" first: {first.instance.id} {first.instance.param_dict} {first.status}"
    ok = bool(reports) and not bad and (budget is None or seconds < budget)
    return ok, detail


@pytest.fixture(scope="module")
def grid():
    return h.run_instances(h.default_suite(), h.default_jobs())


def check_tables(reports):
    table = [r for r in reports if r.instance in TABLE_SET]
    ok, detail = _judge(table, None)
    ok = ok and all(r.elapsed_ms < 1000 for r in table)
    for name in ("table2", "table6", "table7", "table8"):
        start = time.perf_counter()
        rows = table_rows(name)
        elapsed = time.perf_counter() - start
        ok = ok and all(row["ok"] for row in rows) and elapsed < 1
    return record(1, ok, "tables 2, 6, 7, 8 " + detail)


def check_criterion(reports, number, description, select, budget):
    ok, detail = _judge([r for r in reports if select(r.instance)], budget)
    return record(number, ok, f"{description} {detail}")


def check_products(reports):
    chosen = [r for r in reports if _is_product(r)]
    ok, detail = _judge(chosen, None)
    return record(11, ok, f"infinite products through q^30 {detail}")


def check_mutation():
    original = cf.bg_closed
    cf.bg_closed = lambda *a, **k: -original(*a, **k)
    try:
        instances = [i for i in h.default_suite() if i.id == "T3_1"]
        reports = h.run_instances(instances, 1)
    finally:
        cf.bg_closed = original
    failed = [r for r in reports if r.status == "Fail" and r.first_discrepancy]
    detail = f"(sign-flipped BG closed form: {len(failed)}/{len(reports)} instances fail)"
    if failed:
        detail += f" first discrepancy {failed[0].first_discrepancy}"
    return record(12, bool(failed), detail)


def test_tables(grid):
    assert check_tables(grid)


@pytest.mark.parametrize("number,description,select,budget", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(grid, number, description, select, budget):
    assert check_criterion(grid, number, description, select, budget)


def test_products(grid):
    assert check_products(grid)


def test_mutation():
    assert check_mutation()


def test_grid_fully_covered(grid):
    claimed = [r for r in grid if r.instance in TABLE_SET
               or any(sel(r.instance) for _, _, sel, _ in CRITERIA)
               or _is_product(r)]
    assert len(claimed) == len(grid)


if __name__ == "__main__":
    reports = h.run_instances(h.default_suite(), h.default_jobs())
    results = [check_tables(reports)]
    results += [check_criterion(reports, *c) for c in CRITERIA]
    results += [check_products(reports), check_mutation()]
    sys.exit(0 if all(results) else 1)
