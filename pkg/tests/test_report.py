import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbtqsim import builtin_case, make_policy, run
from gbtqsim.engine import Schedule, Slice
from gbtqsim.policies import POLICY_NAMES
from gbtqsim.report import (CSV_HEADER, IncompleteScheduleError, comparison_csv,
                            comparison_json, comparison_table, compare, fmt_number,
                            metrics, render_gantt)
from gbtqsim.workload import Workload


def test_single_process_metrics():
    w = Workload.from_tuples([(0, 13)])
    m = metrics(run(w, make_policy("gbtq", w)))
    assert (m.atat, m.awt, m.art, m.cs, m.utilization) == (13, 0, 0, 0, 1)


def test_case1_rr_metrics():
    w, _ = builtin_case(1)
    m = metrics(run(w, make_policy("rr", w)))
    assert m.atat == Fraction(6813, 10)
    assert m.awt == 571
    assert m.cs == 58


def test_case3_gbtq_metrics():
    w, a = builtin_case(3)
    m = metrics(run(w, make_policy("gbtq", w, a)))
    assert (m.atat, m.awt, m.cs) == (205, Fraction(245, 2), 3)


def test_incomplete_schedule_rejected():
    w = Workload.from_tuples([(0, 5), (0, 5)])
    with pytest.raises(IncompleteScheduleError):
        metrics(Schedule((Slice(1, 0, 5),), w))


def test_utilization_with_idle():
    w = Workload.from_tuples([(0, 2), (6, 2)])
    assert metrics(run(w, make_policy("fcfs", w))).utilization == Fraction(1, 2)


@pytest.mark.parametrize("value, text", [
    (Fraction(2334, 7), "333.43"), (Fraction(2294, 7), "327.71"),
    (Fraction(6813, 10), "681.3"), (Fraction(571), "571"), (Fraction(1, 8), "0.13"),
    (Fraction(-1, 8), "-0.13"),
])
def test_fmt_number_half_up(value, text):
    assert fmt_number(value) == text


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 50), st.integers(1, 50)), min_size=1, max_size=8),
       st.sampled_from(POLICY_NAMES))
def test_metric_identities(pairs, name):
    w = Workload.from_tuples(pairs)
    m = metrics(run(w, make_policy(name, w)))
    total_burst = sum(b for _, b in pairs)
    assert sum(r.tat for r in m.rows) == sum(r.wt for r in m.rows) + total_burst
    assert m.awt == m.atat - Fraction(total_burst, len(pairs))
    for r in m.rows:
        assert r.tat == r.finish - r.arrival
        assert r.response == r.first_start - r.arrival
    if name in ("fcfs", "sjf", "hrrn"):
        assert all(r.wt == r.response for r in m.rows)


def test_gantt_single():
    w = Workload.from_tuples([(0, 7)])
    assert render_gantt(run(w, make_policy("fcfs", w))) == "|P1|\n0  7\n"


def test_gantt_case2_boundaries():
    w, a = builtin_case(2)
    text = render_gantt(run(w, make_policy("gbtq", w, a)))
    bar, marks = text.splitlines()
    assert bar.count("|") == 5
    assert marks.split() == ["0", "11", "57", "139", "234"]
    # every boundary sits under its separator
    for pos, ch in enumerate(bar):
        if ch == "|":
            assert marks[pos].isdigit()


def test_gantt_wraps_and_shows_idle():
    w = Workload.from_tuples([(0, 3), (10, 4)] + [(20, 30)] * 3)
    text = render_gantt(run(w, make_policy("rr", w, tq=5)), width=24)
    lines = text.splitlines()
    assert len(lines) > 2 and all(len(line) <= 24 for line in lines)
    assert "idle" in lines[0]
    # wrapped row restates the boundary it starts from
    assert lines[1].split()[-1] == lines[3].split()[0]


def test_gantt_width_floor():
    w = Workload.from_tuples([(0, 7)])
    with pytest.raises(ValueError):
        render_gantt(run(w, make_policy("fcfs", w)), width=10)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 30)), min_size=1, max_size=6),
       st.lists(st.tuples(st.integers(1, 4), st.integers(1, 30)), min_size=1, max_size=6))
def test_gantt_injective(a, b):
    def build(cells):
        out, t = [], 0
        for pid, d in cells:
            if out and out[-1].pid == pid:
                continue
            out.append(Slice(pid, t, t + d))
            t += d
        return out
    sa, sb = build(a), build(b)
    w = Workload.from_tuples([(0, 1)] * 4)
    ga = render_gantt(Schedule(tuple(sa), w), 30)
    gb = render_gantt(Schedule(tuple(sb), w), 30)
    assert (ga == gb) == (sa == sb)


def test_compare_rows():
    w, a = builtin_case(2)
    rows = compare(w, ["rr", "gbtq"], alpha=a)
    assert [r.tq for r in rows] == ["20", "20, 46, 82, 95"]
    line = comparison_table(rows).splitlines()[-1]
    assert line.split(None, 1)[1].split() == ["20,", "46,", "82,", "95", "110.25", "51.75", "3"]


def test_compare_case5_tq_cell():
    w, a = builtin_case(5)
    assert compare(w, ["gbtq"], alpha=a)[0].tq == "20, 20, 55, 75"


def test_compare_case4_identical():
    w, a = builtin_case(4)
    rr, gb = compare(w, ["rr", "gbtq"], alpha=a)
    assert (rr.report.atat, rr.report.awt, rr.report.cs) == (gb.report.atat, gb.report.awt, gb.report.cs)


def test_csv_and_json_exports():
    w, a = builtin_case(1)
    rows = compare(w, ["rr", "gbtq"], alpha=a)
    csv_text = comparison_csv(rows, case="1")
    lines = csv_text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "1,RR,20,681.3,571,58"
    assert lines[2] == '1,GBTQ,"20, 39, 30, 20",610.9,500.6,44'
    payload = json.loads(comparison_json(rows, case="1"))
    assert {"rows", "atat", "awt", "art", "cs", "makespan", "utilization"} <= set(payload[0])
    assert payload[1]["cs"] == 44


def test_compare_unknown_and_empty():
    w, _ = builtin_case(1)
    with pytest.raises(ValueError):
        compare(w, [])
    with pytest.raises(ValueError, match="unknown policy"):
        compare(w, ["lottery"])
