import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbtqsim import builtin_case, context_switches, make_policy, run
from gbtqsim.engine import Dispatch, Schedule, SimulationError, Slice
from gbtqsim.policies import POLICY_NAMES
from gbtqsim.workload import Workload
from oracles import tick_rr


def slices(schedule):
    return [(s.pid, s.start, s.end) for s in schedule.merged()]


@pytest.mark.parametrize("name", POLICY_NAMES)
def test_single_process_one_slice(name):
    w = Workload.from_tuples([(0, 9)])
    s = run(w, make_policy(name, w))
    assert slices(s) == [(1, 0, 9)]
    assert context_switches(s) == 0


def test_case2_rr_trace():
    w, _ = builtin_case(2)
    s = run(w, make_policy("rr", w, tq=20))
    assert [(x.pid, x.start, x.end) for x in s.slices[:5]] == [
        (1, 0, 11), (2, 11, 31), (3, 31, 51), (4, 51, 71), (2, 71, 91)]
    assert s.finish_times() == {1: 11, 2: 137, 3: 219, 4: 234}


def test_case3_gbtq_trace():
    w, a = builtin_case(3)
    s = run(w, make_policy("gbtq", w, alpha=a))
    assert slices(s) == [(1, 0, 81), (2, 81, 163), (3, 163, 246), (4, 246, 330)]


@pytest.mark.parametrize("n, makespan", [(1, 1103), (2, 234), (3, 330), (4, 516)])
def test_work_conservation_makespan(n, makespan):
    w, a = builtin_case(n)
    for name in POLICY_NAMES:
        assert run(w, make_policy(name, w, alpha=a)).makespan == makespan


@pytest.mark.parametrize("n, expected", [(1, 58), (2, 13), (3, 19), (4, 31)])
def test_rr_context_switches(n, expected):
    w, _ = builtin_case(n)
    assert context_switches(run(w, make_policy("rr", w))) == expected


def test_context_switch_merges_self_continuation():
    w = Workload.from_tuples([(0, 5), (0, 3)])
    s = Schedule((Slice(1, 0, 2), Slice(1, 2, 5), Slice(2, 5, 8)), w)
    assert context_switches(s) == 1


def test_idle_gap_emits_no_slice():
    w = Workload.from_tuples([(0, 3), (10, 4)])
    s = run(w, make_policy("rr", w))
    assert slices(s) == [(1, 0, 3), (2, 10, 14)]
    assert s.idle_gaps() == [(3, 10)]
    s.validate()


def test_arrival_at_slice_end_precedes_requeue():
    # P2 arrives exactly when P1's first quantum ends; P2 must run next.
    w = Workload.from_tuples([(0, 30), (20, 5)])
    s = run(w, make_policy("rr", w, tq=20))
    assert slices(s) == [(1, 0, 20), (2, 20, 25), (1, 25, 35)]


class _Rogue:
    name = "rogue"

    def __init__(self, pid=None, quantum=5):
        self.pid, self.quantum = pid, quantum

    def select(self, now, ready, next_arrival):
        return Dispatch(self.pid or ready[0].pid, self.quantum)


def test_policy_selecting_unarrived_process():
    w = Workload.from_tuples([(0, 3), (10, 4)])
    with pytest.raises(SimulationError, match="not ready"):
        run(w, _Rogue(pid=2))


def test_policy_zero_quantum():
    w = Workload.from_tuples([(0, 3)])
    with pytest.raises(SimulationError, match="quantum 0"):
        run(w, _Rogue(quantum=0))


def test_validate_catches_broken_schedules():
    w = Workload.from_tuples([(0, 3), (0, 2)])
    with pytest.raises(SimulationError):
        Schedule((Slice(1, 0, 3),), w).validate()
    with pytest.raises(SimulationError, match="idle"):
        Schedule((Slice(1, 0, 3), Slice(2, 4, 6)), w).validate()
    with pytest.raises(SimulationError, match="before arrival"):
        Schedule((Slice(2, 0, 2), Slice(1, 2, 5)), Workload.from_tuples([(0, 3), (1, 2)])).validate()


workloads = st.lists(st.tuples(st.integers(0, 60), st.integers(1, 60)), min_size=1, max_size=8)


@settings(max_examples=150, deadline=None)
@given(workloads, st.sampled_from(POLICY_NAMES), st.integers(1, 40))
def test_invariants_hold_for_every_policy(pairs, name, alpha):
    w = Workload.from_tuples(pairs)
    s = run(w, make_policy(name, w, alpha=alpha, tq=alpha))
    s.validate()
    assert s.makespan <= max(a for a, _ in pairs) + sum(b for _, b in pairs)
    assert run(w, make_policy(name, w, alpha=alpha, tq=alpha)) == s


@settings(max_examples=150, deadline=None)
@given(workloads, st.integers(1, 30))
def test_rr_matches_tick_oracle(pairs, tq):
    w = Workload.from_tuples(pairs)
    got = run(w, make_policy("rr", w, tq=tq))
    ref_slices, ref_finish = tick_rr(pairs, tq)
    assert slices(got) == ref_slices
    assert got.finish_times() == ref_finish
