"""Results files: one canonical lintel per line between a header and a footer.

    # gauss-lintel v1 size=9 filter=prime+B
    [[0,5],[1,8],...]
    # count=102 elapsed=12.345
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

from ..errors import GaussLintError
from ..schemas.responses import EnumerationReport
from .lintel import Chord, SortedLintel, format_lintel, parse_lintel, sort_lintel

logger = logging.getLogger(__name__)

FORMAT_TAG = "gauss-lintel v1"

_HEADER = re.compile(r"#\s*gauss-lintel v1\s+size=(\d+)\s+filter=(\S+)\s*$")
_FOOTER = re.compile(r"#\s*count=(\d+)(?:\s+elapsed=([0-9.]+))?\s*$")


@dataclass
class LintelFile:
    """Contents of a results file."""

    size: Optional[int] = None
    filter: Optional[str] = None
    count: Optional[int] = None
    elapsed: Optional[float] = None
    lintels: list[SortedLintel] = field(default_factory=list)


def dump_lintels(
    report: EnumerationReport,
    lintels: Sequence[Sequence[Chord]],
    include_elapsed: bool = True,
) -> str:
    lines = [f"# {FORMAT_TAG} size={report.size} filter={report.filter}"]
    lines.extend(format_lintel(lintel) for lintel in lintels)
    footer = f"# count={len(lintels)}"
    if include_elapsed:
        footer += f" elapsed={report.elapsed:.3f}"
    lines.append(footer)
    return "\n".join(lines) + "\n"


def persist(
    report: EnumerationReport,
    lintels: Sequence[Sequence[Chord]],
    path: Union[str, Path],
    include_elapsed: bool = True,
) -> None:
    """Write a results file; errors carry the path."""
    path = Path(path)
    text = dump_lintels(report, lintels, include_elapsed=include_elapsed)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise type(e)(e.errno, f"cannot write results file: {e.strerror}", str(path)) from e
    logger.info(f"[STORE] wrote {len(lintels)} lintels to {path}")


def loads(text: str) -> LintelFile:
    """Parse results-file text; other ``#`` lines are comments."""
    result = LintelFile()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if header := _HEADER.match(line):
                result.size = int(header.group(1))
                result.filter = header.group(2)
            elif footer := _FOOTER.match(line):
                result.count = int(footer.group(1))
                result.elapsed = float(footer.group(2)) if footer.group(2) else None
            continue

        lintel = sort_lintel(parse_lintel(line, line=number))
        if result.size is not None and len(lintel) != result.size:
            raise GaussLintError(f"lintel of size {len(lintel)} in a size-{result.size} file", number)
        result.lintels.append(lintel)

    if result.count is not None and result.count != len(result.lintels):
        logger.warning(f"[STORE] footer says count={result.count}, file holds {len(result.lintels)} lintels")
    return result


def load(path: Union[str, Path]) -> LintelFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise type(e)(e.errno, f"cannot read results file: {e.strerror}", str(path)) from e
    return loads(text)
