"""Request and response models shared by the HTTP service and the CLI client."""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Command = Literal["analyze", "zeta", "classify", "blowup", "compare", "deform-check", "mu-star"]


class Options(BaseModel):
    model_config = ConfigDict(extra="forbid")

    truncation: int = Field(64, ge=4, le=512)
    max_blow_order: Optional[int] = Field(None, ge=1)
    samples: Optional[List[str]] = None
    seed: int = 0
    trials: int = Field(8, ge=1, le=200)
    points: Optional[List[str]] = None
    vars: Optional[List[str]] = None
    level: Optional[int] = Field(None, ge=1)


class AnalysisRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    input: str
    other: Optional[str] = None
    options: Options = Field(default_factory=Options)


class Diagnostics(BaseModel):
    version: str
    truncation: int
    seed: int
    error: Optional[Dict[str, Any]] = None
    notes: List[str] = []


class Report(BaseModel):
    command: Command
    input: Any
    options: Dict[str, Any]
    result: Optional[Dict[str, Any]] = None
    diagnostics: Diagnostics
