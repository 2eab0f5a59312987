"""Deterministic CPU-scheduling workbench with group-based time quantum RR."""

from .engine import Schedule, Slice, context_switches, run
from .policies import GBTQ, POLICY_NAMES, group_processes, make_policy
from .report import MetricsReport, compare, metrics, render_gantt
from .stats import harmonic_mean, median, quartiles, spread
from .workload import ProcessSpec, Workload, builtin_case, parse_workload

__all__ = [
    "GBTQ", "MetricsReport", "POLICY_NAMES", "ProcessSpec", "Schedule", "Slice",
    "Workload", "builtin_case", "compare", "context_switches", "group_processes",
    "harmonic_mean", "make_policy", "median", "metrics", "parse_workload",
    "quartiles", "render_gantt", "run", "spread",
]
