"""Response schemas: criteria reports, enumeration reports and API bodies."""

from typing import Optional

from pydantic import BaseModel, Field


def _flag(value: bool) -> int:
    return 1 if value else 0


def _lintel_text(lintel: list[tuple[int, int]]) -> str:
    return "[" + ",".join(f"[{a},{b}]" for a, b in lintel) + "]"


class CriteriaReport(BaseModel):
    """All realizability conditions evaluated on one diagram."""

    lintel: list[tuple[int, int]] = Field(..., description="Sorted lintel the report is about")
    prime: bool = Field(..., description="Interlacement graph is connected")
    c1: bool
    c2: bool
    b3: bool
    b: bool = Field(..., description="C1 and C2 and B3")
    gl: bool
    stz: bool
    r: bool
    realizable: bool = Field(..., description="Genus oracle verdict (CA)")
    stz_certificate: Optional[list[int]] = Field(
        default=None, description="Diagonal of Lambda, one bit per vertex"
    )
    r_certificate: Optional[list[int]] = Field(
        default=None, description="Membership of A, one bit per vertex"
    )

    def summary_line(self) -> str:
        return (
            f"{_lintel_text(self.lintel)} prime={_flag(self.prime)} C1={_flag(self.c1)} "
            f"C2={_flag(self.c2)} B3={_flag(self.b3)} B={_flag(self.b)} GL={_flag(self.gl)} "
            f"STZ={_flag(self.stz)} R={_flag(self.r)} CA={_flag(self.realizable)}"
        )


class EnumerationReport(BaseModel):
    """Tallies of one enumeration run."""

    size: int = Field(..., description="Number of chords")
    filter: str = Field(..., description="Filter label, e.g. 'prime+CA'")
    dedup: str = Field(..., description="Class counting strategy used")
    workers: int = Field(default=1, description="Worker processes used")
    total_canonical: int = Field(..., description="Equivalence classes visited")
    count: int = Field(..., description="Classes passing the filter")
    counts: dict[str, int] = Field(
        default_factory=dict, description="Criterion combination -> number of classes"
    )
    elapsed: float = Field(default=0.0, description="Wall time in seconds")

    def summary_line(self) -> str:
        return f"size={self.size} filter={self.filter} count={self.count}"


class DiscrepancyRecord(BaseModel):
    """A canonical prime diagram on which two criteria disagree."""

    lintel: list[tuple[int, int]] = Field(..., description="Canonical lintel")
    a: str = Field(..., description="First criterion")
    b: str = Field(..., description="Second criterion")
    report: CriteriaReport


class EnumerateResponse(BaseModel):
    report: EnumerationReport
    lintels: list[str] = Field(..., description="Canonical lintels in L-order")


class CanonResponse(BaseModel):
    lintel: str = Field(..., description="Sorted input")
    canonical: str = Field(..., description="Lyndon lintel of the class")


class ConvertResponse(BaseModel):
    lintel: str
    word: str


class RenderResponse(BaseModel):
    format: str
    content: str
