"""Published per-case results, used by ``gbtq cases`` to audit reproduction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class PublishedRow:
    case: int
    algorithm: str
    tq: str
    atat: str
    awt: str
    cs: int
    # Explains any cell known not to reproduce; None means every cell must MATCH.
    note: Optional[str] = None
    unverified: bool = False


_CASE56 = ("arrival handling for staggered arrivals cannot be recovered from the "
           "published rules; row is not expected to reproduce")

PUBLISHED = (
    PublishedRow(1, "RR", "20", "681.3", "571", 58),
    PublishedRow(1, "GBTQ", "20, 39, 30, 20", "610.9", "498.6", 44,
                 note="published AWT 498.6 contradicts its own ATAT: "
                      "(6109 - 1103) / 10 = 500.6"),
    PublishedRow(2, "RR", "20", "150.25", "91.75", 13),
    PublishedRow(2, "GBTQ", "20, 46, 82, 95", "110.25", "51.75", 3),
    PublishedRow(3, "RR", "20", "325", "242.5", 19),
    PublishedRow(3, "GBTQ", "81, 82, 83, 84", "205", "122.5", 3),
    PublishedRow(4, "RR", "20", "495", "430.5", 31),
    PublishedRow(4, "GBTQ", "20, 20, 20, 20", "495", "430.5", 31),
    PublishedRow(5, "RR", "20", "87.4", "52.6", 8, note=_CASE56, unverified=True),
    PublishedRow(5, "GBTQ", "20, 20, 55, 75", "85.8", "51", 4, note=_CASE56, unverified=True),
    PublishedRow(6, "RR", "20", "333.43", "254.86", 26, note=_CASE56, unverified=True),
    PublishedRow(6, "GBTQ", "24, 20, 20, 150", "327.71", "249.14", 25, note=_CASE56, unverified=True),
)


def published(case: int) -> list[PublishedRow]:
    return [r for r in PUBLISHED if r.case == case]
