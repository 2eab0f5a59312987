"""Scheduling policies: classic baselines, adaptive-quantum RR variants, and GBTQ.

A policy instance is stateful and belongs to exactly one ``engine.run`` call;
build a fresh one per simulation (``make_policy`` does this).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from . import stats
from .engine import Dispatch, ProcessState
from .stats import Quartiles
from .workload import DEFAULT_ALPHA, Workload

POLICY_NAMES = ("fcfs", "sjf", "srtf", "hrrn", "rr", "mmrr", "sarr", "smdrr", "gbtq")
SARR_FLOOR = 25


class UnknownPolicyError(ValueError):
    pass


# -- GBTQ grouping -----------------------------------------------------------

@dataclass(frozen=True)
class GroupAssignment:
    quartiles: Quartiles
    groups: tuple[tuple[int, ...], ...]  # RQ1..RQ4, pids ordered by (burst, pid)
    quanta: tuple[int, int, int, int]
    alpha: int

    def group_of(self, pid: int) -> int:
        for i, members in enumerate(self.groups):
            if pid in members:
                return i
        raise KeyError(pid)

    def quantum_for(self, pid: int) -> int:
        return self.quanta[self.group_of(pid)]


def _group_index(burst, q: Quartiles) -> int:
    if burst <= q.q1:
        return 0
    if burst <= q.q2:
        return 1
    if burst <= q.q3:
        return 2
    return 3


def assign_quanta(groups: Sequence[Sequence[int]], alpha: int) -> tuple[int, int, int, int]:
    """One quantum per group of burst values.

    A group with distinct members gets its min-max spread when that strictly
    exceeds ``alpha``, otherwise ``alpha``. A group whose members are all the
    same burst ``b`` gets ``max(alpha, b)``. Empty groups get ``alpha``.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    out = []
    for members in groups:
        if not members:
            out.append(alpha)
        elif len(set(members)) == 1:
            out.append(max(alpha, members[0]))
        else:
            tq = stats.spread(members)
            out.append(tq if tq > alpha else alpha)
    if len(out) != 4:
        raise ValueError("exactly four groups expected")
    return tuple(out)


def group_processes(bursts: Mapping[int, int], alpha: int = DEFAULT_ALPHA) -> GroupAssignment:
    if not bursts:
        raise ValueError("cannot group an empty set of processes")
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    q = stats.quartiles(bursts.values())
    groups: list[list[int]] = [[], [], [], []]
    for pid, b in sorted(bursts.items(), key=lambda kv: (kv[1], kv[0])):
        groups[_group_index(b, q)].append(pid)
    quanta = assign_quanta([[bursts[p] for p in g] for g in groups], alpha)
    return GroupAssignment(q, tuple(tuple(g) for g in groups), quanta, alpha)


def format_quanta(quanta) -> str:
    return ", ".join(str(x) for x in quanta)


# -- non-preemptive and SRTF -------------------------------------------------

class _KeyedPolicy:
    """Pick the minimum under ``key`` among ready processes."""

    name = "keyed"
    preemptive = False

    def key(self, now: int, st: ProcessState):
        raise NotImplementedError

    def quantum(self, st, next_arrival, now) -> Optional[int]:
        return None

    def describe_quantum(self) -> str:
        return "-"

    def select(self, now, ready, next_arrival):
        st = min(ready, key=lambda s: self.key(now, s))
        return Dispatch(st.pid, self.quantum(st, next_arrival, now))


class FCFS(_KeyedPolicy):
    name = "fcfs"

    def key(self, now, st):
        return (st.arrival, st.pid)


class SJF(_KeyedPolicy):
    name = "sjf"

    def key(self, now, st):
        return (st.burst, st.arrival, st.pid)


class SRTF(_KeyedPolicy):
    """Shortest remaining time; the grant ends at the next arrival so the
    engine re-decides exactly where a preemption could happen."""

    name = "srtf"
    preemptive = True

    def key(self, now, st):
        return (st.remaining, st.arrival, st.pid)

    def quantum(self, st, next_arrival, now):
        if next_arrival is None:
            return None
        return min(st.remaining, next_arrival - now)


def response_ratio(now: int, st: ProcessState) -> Fraction:
    """(waiting + burst) / burst for a not-yet-started process."""
    waiting = now - st.arrival
    return Fraction(waiting + st.burst, st.burst)


class HRRN(_KeyedPolicy):
    name = "hrrn"

    def key(self, now, st):
        return (-response_ratio(now, st), st.arrival, st.pid)


# -- round robin family ------------------------------------------------------

class RoundRobin:
    name = "rr"
    preemptive = True

    def __init__(self, tq: int = 20):
        if tq < 1:
            raise ValueError("tq must be >= 1")
        self.tq = tq

    def describe_quantum(self):
        return str(self.tq)

    def select(self, now, ready, next_arrival):
        return Dispatch(ready[0].pid, self.tq)


class _RoundPolicy:
    """Round-based dispatch: a round snapshots the ready processes, sorts them,
    and serves each once. Processes arriving mid-round wait for the next one."""

    name = "round"
    preemptive = True

    def __init__(self):
        self._round: list[int] = []
        self._round_quantum: dict[int, int] = {}
        self.rounds: list[dict[int, int]] = []  # pid -> quantum, one entry per round

    def sort_key(self, st: ProcessState):
        return (st.remaining, st.pid)

    def plan_round(self, members: Sequence[ProcessState]) -> dict[int, int]:
        raise NotImplementedError

    def select(self, now, ready, next_arrival):
        live = {st.pid: st for st in ready}
        self._round = [pid for pid in self._round if pid in live]
        if not self._round:
            members = sorted(ready, key=self.sort_key)
            self._round_quantum = self.plan_round(members)
            self._round = [st.pid for st in members]
            self.rounds.append(dict(self._round_quantum))
        pid = self._round.pop(0)
        return Dispatch(pid, self._round_quantum[pid])


class _SharedQuantumRound(_RoundPolicy):
    def round_quantum(self, remaining: list[int]) -> int:
        raise NotImplementedError

    def plan_round(self, members):
        tq = self.round_quantum([st.remaining for st in members])
        return {st.pid: tq for st in members}

    def describe_quantum(self):
        seen = sorted({q for r in self.rounds for q in r.values()})
        return "adaptive" if not seen else format_quanta(seen)


class MMRR(_SharedQuantumRound):
    name = "mmrr"

    def __init__(self, alpha: int = DEFAULT_ALPHA):
        super().__init__()
        if alpha < 1:
            raise ValueError("alpha must be >= 1")
        self.alpha = alpha

    def round_quantum(self, remaining):
        return max(self.alpha, stats.spread(remaining))


class SARR(_SharedQuantumRound):
    name = "sarr"

    def round_quantum(self, remaining):
        med = stats.median(remaining)
        return SARR_FLOOR if med < SARR_FLOOR else math.ceil(med)


class SMDRR(_SharedQuantumRound):
    name = "smdrr"

    def round_quantum(self, remaining):
        return max(1, math.ceil(stats.harmonic_mean(remaining)))


class GBTQ(_RoundPolicy):
    """Group-based time quantum RR.

    ``static`` groups once over every burst in the workload; ``dynamic``
    regroups the remaining bursts of the ready processes at each round.
    """

    name = "gbtq"

    def __init__(self, workload: Workload, alpha: int = DEFAULT_ALPHA, regroup: str = "static"):
        super().__init__()
        if regroup not in ("static", "dynamic"):
            raise ValueError(f"regroup must be 'static' or 'dynamic', not {regroup!r}")
        if alpha < 1:
            raise ValueError("alpha must be >= 1")
        self.alpha = alpha
        self.regroup = regroup
        self.assignment = group_processes({p.pid: p.burst for p in workload}, alpha)
        self.assignments: list[GroupAssignment] = []

    def sort_key(self, st):
        if self.regroup == "static":
            return (st.burst, st.pid)
        return (st.remaining, st.pid)

    def plan_round(self, members):
        if self.regroup == "static":
            ga = self.assignment
        else:
            ga = group_processes({st.pid: st.remaining for st in members}, self.alpha)
            self.assignments.append(ga)
        return {st.pid: ga.quantum_for(st.pid) for st in members}

    def describe_quantum(self):
        return format_quanta(self.assignment.quanta)


def gbtq_policy(workload, alpha=DEFAULT_ALPHA, regroup_mode="static") -> GBTQ:
    return GBTQ(workload, alpha, regroup_mode)


def rr_policy(tq: int = 20) -> RoundRobin:
    return RoundRobin(tq)


def fcfs_policy() -> FCFS:
    return FCFS()


def sjf_policy() -> SJF:
    return SJF()


def srtf_policy() -> SRTF:
    return SRTF()


def hrrn_policy() -> HRRN:
    return HRRN()


def mmrr_policy(alpha: int = DEFAULT_ALPHA) -> MMRR:
    return MMRR(alpha)


def sarr_policy() -> SARR:
    return SARR()


def smdrr_policy() -> SMDRR:
    return SMDRR()


_FACTORIES: dict[str, Callable] = {
    "fcfs": lambda w, a, t, r: FCFS(),
    "sjf": lambda w, a, t, r: SJF(),
    "srtf": lambda w, a, t, r: SRTF(),
    "hrrn": lambda w, a, t, r: HRRN(),
    "rr": lambda w, a, t, r: RoundRobin(t),
    "mmrr": lambda w, a, t, r: MMRR(a),
    "sarr": lambda w, a, t, r: SARR(),
    "smdrr": lambda w, a, t, r: SMDRR(),
    "gbtq": lambda w, a, t, r: GBTQ(w, a, r),
}


def make_policy(name: str, workload: Workload, alpha: int = DEFAULT_ALPHA,
                tq: int = 20, regroup: str = "static"):
    try:
        factory = _FACTORIES[name.lower()]
    except KeyError:
        raise UnknownPolicyError(
            f"unknown policy {name!r}; choose from {', '.join(POLICY_NAMES)}") from None
    return factory(workload, alpha, tq, regroup)
