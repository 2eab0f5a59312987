"""Discrete-time single-CPU simulation core.

The engine owns the clock and a FIFO ready queue. At every decision point it
asks the policy for a ``Dispatch``; the chosen process then runs for
``min(quantum, remaining)`` units, or to completion when the quantum is
``None``. Arrivals that land during a slice (including exactly at its end)
join the queue before the preempted process is requeued at the tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Protocol, Sequence

from .workload import ProcessSpec, Workload


class SimulationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Slice:
    pid: int
    start: int
    end: int

    @property
    def duration(self) -> int:
        return self.end - self.start


@dataclass
class ProcessState:
    spec: ProcessSpec
    remaining: int = field(init=False)
    first_start: Optional[int] = None
    finish: Optional[int] = None

    def __post_init__(self):
        self.remaining = self.spec.burst

    @property
    def pid(self) -> int:
        return self.spec.pid

    @property
    def arrival(self) -> int:
        return self.spec.arrival

    @property
    def burst(self) -> int:
        return self.spec.burst


class Dispatch(NamedTuple):
    pid: int
    quantum: Optional[int]  # None: run to completion


class Policy(Protocol):
    name: str

    def select(self, now: int, ready: Sequence[ProcessState],
               next_arrival: Optional[int]) -> Dispatch:
        """Pick one process from ``ready`` (FIFO order, non-empty)."""
        ...


@dataclass(frozen=True)
class Schedule:
    slices: tuple[Slice, ...]
    workload: Workload

    def finish_times(self) -> dict[int, int]:
        out = {}
        for s in self.slices:
            out[s.pid] = s.end
        return out

    def first_starts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.slices:
            out.setdefault(s.pid, s.start)
        return out

    @property
    def makespan(self) -> int:
        return self.slices[-1].end if self.slices else 0

    def merged(self) -> list[Slice]:
        """Adjacent slices of the same process fused into one."""
        out: list[Slice] = []
        for s in self.slices:
            if out and out[-1].pid == s.pid and out[-1].end == s.start:
                out[-1] = Slice(s.pid, out[-1].start, s.end)
            else:
                out.append(s)
        return out

    def idle_gaps(self) -> list[tuple[int, int]]:
        gaps = []
        t = 0
        for s in self.slices:
            if s.start > t:
                gaps.append((t, s.start))
            t = s.end
        return gaps

    def validate(self) -> None:
        """Raise ``SimulationError`` if any schedule invariant is broken."""
        specs = self.workload.by_pid()
        done = {pid: 0 for pid in specs}
        t = 0
        for s in self.slices:
            if s.pid not in specs:
                raise SimulationError(f"slice for unknown pid {s.pid}")
            if s.end <= s.start:
                raise SimulationError(f"empty slice {s}")
            if s.start < t:
                raise SimulationError(f"overlapping slice {s}")
            if s.start < specs[s.pid].arrival:
                raise SimulationError(f"{s} starts before arrival")
            if s.start > t:
                # idle gap: nothing may have been waiting
                waiting = [p for p in specs.values()
                           if p.arrival <= t and done[p.pid] < p.burst]
                if waiting:
                    raise SimulationError(f"CPU idle at {t} with P{waiting[0].pid} ready")
            done[s.pid] += s.duration
            t = s.end
        for pid, spec in specs.items():
            if done[pid] != spec.burst:
                raise SimulationError(f"P{pid} ran {done[pid]} of {spec.burst}")


def run(workload: Workload, policy: Policy) -> Schedule:
    states = {p.pid: ProcessState(p) for p in workload}
    pending = sorted(workload, key=lambda p: (p.arrival, p.pid))
    queue: list[ProcessState] = []
    slices: list[Slice] = []
    nxt = 0
    now = 0
    unfinished = len(states)

    def admit(until):
        nonlocal nxt
        while nxt < len(pending) and pending[nxt].arrival <= until:
            queue.append(states[pending[nxt].pid])
            nxt += 1

    while unfinished:
        admit(now)
        if not queue:
            now = pending[nxt].arrival
            continue
        next_arrival = pending[nxt].arrival if nxt < len(pending) else None
        pid, quantum = policy.select(now, tuple(queue), next_arrival)
        st = states.get(pid)
        if st is None or st not in queue:
            raise SimulationError(f"{policy.name} selected P{pid}, which is not ready at t={now}")
        if quantum is not None and quantum < 1:
            raise SimulationError(f"{policy.name} returned quantum {quantum} < 1")
        ran = st.remaining if quantum is None else min(quantum, st.remaining)
        queue.remove(st)
        if st.first_start is None:
            st.first_start = now
        slices.append(Slice(pid, now, now + ran))
        now += ran
        st.remaining -= ran
        admit(now)
        if st.remaining:
            queue.append(st)
        else:
            st.finish = now
            unfinished -= 1

    return Schedule(tuple(slices), workload)


def context_switches(schedule: Schedule) -> int:
    """Boundaries between different processes; switch time itself is zero."""
    merged = schedule.merged()
    return max(len(merged) - 1, 0)
