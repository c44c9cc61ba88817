"""
The JSON description of a matroid read by the command line: either a
list of group elements or explicit rank and multiplicity tables.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

from arithmat.exceptions import MalformedInputError, SchemaError
from arithmat.group import FgGroup
from arithmat.matroid import ArithmeticMatroid
from arithmat.representation import Representation, from_representation


class GroupSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    free_rank: int = Field(ge=0)
    torsion: list[int] = Field(default_factory=list)

    def to_group(self) -> FgGroup:
        return FgGroup(self.free_rank, self.torsion)


class RepresentationInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["representation"]
    group: GroupSpec
    elements: list[list[int]]
    labels: list[str] | None = None

    @model_validator(mode="after")
    def _element_lengths(self) -> RepresentationInput:
        width = self.group.free_rank + len(self.group.torsion)
        for i, element in enumerate(self.elements):
            if len(element) != width:
                msg = f"element {i} has {len(element)} coordinates, the group needs {width}"
                raise ValueError(msg)
        return self

    def to_representation(self) -> Representation:
        return Representation(self.group.to_group(), self.elements, self.labels)

    def to_matroid(self) -> ArithmeticMatroid:
        return from_representation(self.to_representation())


class ExplicitInput(BaseModel):
    """
    Tables keyed by the sublist bitmask written as a decimal string,
    bit i standing for ground element i.
    """

    model_config = ConfigDict(extra="forbid")

    kind: Literal["explicit"]
    size: int = Field(ge=0)
    rank: dict[str, int]
    multiplicity: dict[str, int]
    labels: list[str] | None = None

    @model_validator(mode="after")
    def _complete_tables(self) -> ExplicitInput:
        expected = {str(mask) for mask in range(1 << self.size)}
        for name, table in (("rank", self.rank), ("multiplicity", self.multiplicity)):
            missing = sorted(expected - table.keys(), key=int)
            extra = sorted(table.keys() - expected)
            if missing:
                msg = f"{name} table is missing {len(missing)} key(s), first missing key {missing[0]!r}"
                raise ValueError(msg)
            if extra:
                msg = f"{name} table has key(s) outside 0..{(1 << self.size) - 1}: {extra[0]!r}"
                raise ValueError(msg)
        return self

    def to_matroid(self) -> ArithmeticMatroid:
        return ArithmeticMatroid.from_tables(
            self.size,
            {int(key): value for key, value in self.rank.items()},
            {int(key): value for key, value in self.multiplicity.items()},
            labels=self.labels,
        )

    @classmethod
    def from_matroid(cls, m: ArithmeticMatroid) -> ExplicitInput:
        return cls(
            kind="explicit",
            size=m.size,
            rank={str(mask): value for mask, value in enumerate(m.rank_table())},
            multiplicity={str(mask): value for mask, value in enumerate(m.multiplicity_table())},
            labels=list(m.ground.labels) if m.ground.labels else None,
        )


MatroidInput = Annotated[RepresentationInput | ExplicitInput, Field(discriminator="kind")]

_ADAPTER: TypeAdapter[RepresentationInput | ExplicitInput] = TypeAdapter(MatroidInput)


def _describe(error: ValidationError) -> str:
    first = error.errors()[0]
    where = ".".join(str(part) for part in first["loc"])
    message = first["msg"].removeprefix("Value error, ")
    return f"{where}: {message}" if where else message


def parse_input(text: str | bytes) -> RepresentationInput | ExplicitInput:
    """
    Parse a JSON matroid description.

    Args:
        text (str | bytes): The raw JSON.

    Raises:
        MalformedInputError: If `text` isn't valid JSON.
        SchemaError: If it is JSON but not a valid description.

    Returns:
        RepresentationInput | ExplicitInput: The parsed description.
    """
    try:
        return _ADAPTER.validate_json(text)
    except ValidationError as error:
        if any(e["type"] == "json_invalid" for e in error.errors()):
            raise MalformedInputError(f"input is not valid JSON: {error.errors()[0]['msg']}") from error
        raise SchemaError(_describe(error)) from error
