"""
Proportionally modular systems: the points x of N^p with A x mod b <= G x row by row.
"""
import logging
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from semicovers.errors import DimensionMismatchError

logger = logging.getLogger("semicovers.varieties.modular")


class ModularSystem(BaseModel):
    model_config = ConfigDict(frozen=True)

    A: tuple[tuple[int, ...], ...] = Field(description="Row i holds residues in [0, b_i - 1].", examples=[[[3]]])
    G: tuple[tuple[int, ...], ...] = Field(description="Integer right-hand-side coefficients.", examples=[[[2]]])
    b: tuple[int, ...] = Field(description="Positive moduli, one per row.", examples=[[7]])

    @model_validator(mode="after")
    def _shapes(self) -> "ModularSystem":
        if not self.b:
            raise ValueError("a modular system needs at least one row")
        if len(self.A) != len(self.b) or len(self.G) != len(self.b):
            raise ValueError("A, G and b must have the same number of rows")
        width = len(self.A[0])
        if width == 0 or any(len(row) != width for row in self.A + self.G):
            raise ValueError("every row of A and G must have the same positive length")
        for i, (row, bi) in enumerate(zip(self.A, self.b)):
            if bi <= 0:
                raise ValueError(f"modulus b[{i}] = {bi} is not positive")
            if any(not 0 <= a < bi for a in row):
                raise ValueError(f"row {i} of A has entries outside [0, {bi - 1}]")
        return self

    @property
    def dim(self) -> int:
        return len(self.A[0])


def pm_member(system: ModularSystem, x: Sequence[int]) -> bool:
    if len(x) != system.dim:
        raise DimensionMismatchError(f"Point {tuple(x)} is not in dimension {system.dim}")
    for a_row, g_row, bi in zip(system.A, system.G, system.b):
        lhs = sum(a * v for a, v in zip(a_row, x)) % bi
        if lhs > sum(g * v for g, v in zip(g_row, x)):
            return False
    return True


def pm_quotient(system: ModularSystem, d: int) -> ModularSystem:
    """System whose solutions are the x with d x solving ``system``."""
    return ModularSystem(
        A=tuple(tuple((d * a) % bi for a in row) for row, bi in zip(system.A, system.b)),
        G=tuple(tuple(d * g for g in row) for row in system.G),
        b=system.b,
    )


def pm_intersect(first: ModularSystem, second: ModularSystem) -> ModularSystem:
    if first.dim != second.dim:
        raise DimensionMismatchError(f"Cannot intersect systems in dimensions {first.dim} and {second.dim}")
    return ModularSystem(A=first.A + second.A, G=first.G + second.G, b=first.b + second.b)


__all__ = [
    "ModularSystem",
    "pm_member",
    "pm_quotient",
    "pm_intersect",
]
