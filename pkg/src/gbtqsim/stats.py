"""Order statistics on burst-time multisets.

Everything is exact: quartiles and medians come back as ``Fraction`` so that
boundary tests such as ``burst <= q1`` never suffer rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


class EmptyDataError(ValueError):
    pass


@dataclass(frozen=True)
class Quartiles:
    q1: Fraction
    q2: Fraction
    q3: Fraction

    def __iter__(self):
        return iter((self.q1, self.q2, self.q3))


def _sorted(values: Iterable[int]) -> list[int]:
    data = sorted(values)
    if not data:
        raise EmptyDataError("statistic of empty data")
    return data


def _median_sorted(data) -> Fraction:
    n = len(data)
    mid = n // 2
    if n % 2:
        return Fraction(data[mid])
    return Fraction(data[mid - 1] + data[mid], 2)


def median(values: Iterable[int]) -> Fraction:
    return _median_sorted(_sorted(values))


def quartiles(values: Iterable[int]) -> Quartiles:
    """Tukey-style quartiles using exclusive halves.

    For an odd count the middle element is left out of both halves.
    One element gives ``q1 == q2 == q3``.
    """
    data = _sorted(values)
    n = len(data)
    q2 = _median_sorted(data)
    if n == 1:
        return Quartiles(q2, q2, q2)
    half = n // 2
    lower = data[:half]
    upper = data[n - half:]
    return Quartiles(_median_sorted(lower), q2, _median_sorted(upper))


def spread(values: Iterable[int]) -> int:
    """Max minus min."""
    data = _sorted(values)
    return data[-1] - data[0]


def harmonic_mean(values: Iterable[int]) -> Fraction:
    data = list(values)
    if not data:
        raise EmptyDataError("harmonic_mean of empty data")
    if any(v <= 0 for v in data):
        raise ValueError("harmonic_mean requires positive values")
    return len(data) / sum(Fraction(1, v) for v in data)
