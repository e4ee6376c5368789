from parmac.qt import q, t
from parmac.shapes import SplitIndex
from parmac.verify import (
    e1_closed, e1_direct, e1_geometric, reference_diagnostic, summarize, verify_chain, verify_pieri,
    verify_ti, y2_geometric,
)


def test_three_e1_routes_agree():
    for src in (SplitIndex((), (0, 1)), SplitIndex((1,), (1, 0)), SplitIndex((), (0, 0, 1))):
        assert e1_closed(src) == e1_geometric(src) == e1_direct(src)


def test_small_sweeps_pass():
    reports = verify_ti(4, 2) + verify_pieri(2, 2) + verify_chain(seed=1, cases=4, k_max=2)
    summary = summarize(reports)
    assert {"ti", "pieri", "chain"} <= set(summary)
    assert all(s["passed"] == s["cases"] for s in summary.values())


def test_y2_geometric_values():
    geo = y2_geometric()
    assert sorted(map(str, geo.values())) == sorted(map(str, [
        1 / (t - q), (t - 1) * t / ((q - t) * (t ** 2 - q)), 1 / (q - t ** 2)]))


def test_reference_diagnostic_shape():
    rows = reference_diagnostic()
    assert {r["reading"] for r in rows} == {"symmetric block first", "symmetric block last"}
    assert all({"equal", "equal_starred", "A"} <= set(r) for r in rows)
