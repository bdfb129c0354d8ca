"""JSON file formats. Rationals are strings "a/b" or "a"."""

from fractions import Fraction
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, model_validator

from src.errors import FormatError
from src.ratmath.rational import format_rational, parse_rational


def _rational(value) -> Fraction:
    try:
        return parse_rational(value)
    except FormatError as e:
        raise ValueError(str(e)) from None


RationalStr = Annotated[Fraction, PlainValidator(_rational), PlainSerializer(format_rational, return_type=str)]


class FileModel(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True, frozen=True)


class AutomatonFile(FileModel):
    states: int = Field(ge=0)
    initial: list[tuple[int, RationalStr]] = []
    final: list[tuple[int, RationalStr]] = []
    transitions: list[tuple[int, int, RationalStr]] = []

    @model_validator(mode="after")
    def _states_in_range(self):
        used = [q for q, _ in self.initial] + [q for q, _ in self.final]
        used += [q for p, q, _ in self.transitions] + [p for p, _, _ in self.transitions]
        bad = [q for q in used if not 0 <= q < self.states]
        if bad:
            raise ValueError(f"state {bad[0]} out of range for {self.states} states")
        return self


class MachineFile(FileModel):
    registers: list[str]
    states: int = Field(ge=1)
    initial_state: int = 0
    nu0: dict[str, RationalStr] = {}
    delta: list[tuple[int, dict[str, str]]]
    mu: dict[int, str] = {}


class RecurrenceFile(FileModel):
    coeffs: list[RationalStr]
    init: list[RationalStr]


class SeriesFile(FileModel):
    num: list[RationalStr]
    den: list[RationalStr] = [Fraction(1)]
