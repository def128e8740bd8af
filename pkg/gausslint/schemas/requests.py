"""Request schemas: filters, dedup modes and API request bodies."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from ..errors import GaussLintError


class Criterion(str, Enum):
    """Criteria a filter can require, in hot-loop evaluation order."""

    C2 = "C2"
    B3 = "B3"
    B = "B"
    GL = "GL"
    STZ = "STZ"
    R = "R"
    CA = "CA"


CRITERIA_ORDER = list(Criterion)


class DedupMode(str, Enum):
    """How equivalence classes are counted."""

    SET = "set"
    LYNDON_TEST = "lyndon-test"


def parse_criterion(token: str) -> Criterion:
    try:
        return Criterion(token.strip().upper())
    except ValueError:
        valid = ", ".join(c.value.lower() for c in Criterion)
        raise GaussLintError(f"unknown criterion {token!r}; expected one of {valid}") from None


class FilterSpec(BaseModel):
    """Primality plus an all-of set of criteria; no criteria means pure enumeration."""

    require_prime: bool = Field(default=False, description="Only count prime diagrams")
    criteria: list[Criterion] = Field(default_factory=list, description="All must hold")

    @field_validator("criteria")
    @classmethod
    def _canonical_order(cls, value: list[Criterion]) -> list[Criterion]:
        return sorted(set(value), key=CRITERIA_ORDER.index)

    @classmethod
    def parse(cls, text: str) -> "FilterSpec":
        """Comma-separated lowercase tokens, e.g. ``prime,ca``."""
        require_prime = False
        criteria = []
        for token in (t.strip() for t in text.split(",")):
            if not token:
                continue
            if token.lower() == "prime":
                require_prime = True
            else:
                criteria.append(parse_criterion(token))
        return cls(require_prime=require_prime, criteria=criteria)

    @property
    def label(self) -> str:
        """``prime+B``, ``CA`` or ``all``."""
        parts = (["prime"] if self.require_prime else []) + [c.value for c in self.criteria]
        return "+".join(parts) or "all"


class DiagramRequest(BaseModel):
    """A single diagram: lintel listing or Gauss word."""

    diagram: str = Field(..., description="Lintel like [[0,3],[1,4],[2,5]] or Gauss word like 123123")


class RenderRequest(DiagramRequest):
    format: str = Field(default="svg", description="Output format: 'svg' or 'dot'")


class EnumerateRequest(BaseModel):
    """Request to enumerate canonical diagrams of one size."""

    size: int = Field(..., ge=1, description="Number of chords")
    filter: str = Field(default="prime", description="Comma-separated filter tokens, e.g. 'prime,ca'")
    dedup: Optional[DedupMode] = Field(default=None, description="Class counting strategy")


class DiscrepancyRequest(BaseModel):
    """Request to list prime diagrams on which two criteria disagree."""

    size: int = Field(..., ge=1, description="Number of chords")
    a: Criterion = Field(default=Criterion.B, description="First criterion")
    b: Criterion = Field(default=Criterion.CA, description="Second criterion")
