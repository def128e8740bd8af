"""Counts across sizes, checked against the published enumeration."""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from ..schemas import DedupMode, FilterSpec
from .enumeration import enumerate_diagrams

logger = logging.getLogger(__name__)

_REALIZABLE = {3: 1, 4: 1, 5: 2, 6: 3, 7: 10, 8: 27, 9: 101, 10: 364, 11: 1610, 12: 7202}
_PARITY = {3: 1, 4: 1, 5: 2, 6: 3, 7: 10, 8: 27, 9: 102, 10: 370, 11: 1646, 12: 7437}

# Canonical prime diagrams per size; the realizable row is OEIS A264759.
KNOWN_COUNTS: dict[str, dict[int, int]] = {
    "prime+CA": _REALIZABLE,
    "prime+STZ": _REALIZABLE,
    "prime+R": _REALIZABLE,
    "prime+B": _PARITY,
    "prime+GL": _PARITY,
}


@dataclass
class TableRow:
    size: int
    filter: str
    count: int
    expected: Optional[int] = None

    @property
    def match(self) -> Optional[bool]:
        return None if self.expected is None else self.count == self.expected


def run_table(
    sizes: Iterable[int],
    specs: Iterable[FilterSpec],
    workers: Optional[int] = None,
    dedup: Optional[DedupMode] = None,
) -> list[TableRow]:
    specs = list(specs)
    rows = []
    for n in sizes:
        for spec in specs:
            report, _ = enumerate_diagrams(n, spec, workers=workers, dedup=dedup)
            expected = KNOWN_COUNTS.get(spec.label, {}).get(n)
            row = TableRow(size=n, filter=spec.label, count=report.count, expected=expected)
            if row.match is False:
                logger.warning(f"[TABLE] size={n} filter={spec.label}: got {row.count}, expected {expected}")
            rows.append(row)
    return rows


def to_tsv(rows: Iterable[TableRow]) -> str:
    lines = ["size\tfilter\tcount\texpected\tmatch"]
    for row in rows:
        expected = "" if row.expected is None else str(row.expected)
        match = "" if row.match is None else str(int(row.match))
        lines.append(f"{row.size}\t{row.filter}\t{row.count}\t{expected}\t{match}")
    return "\n".join(lines) + "\n"
