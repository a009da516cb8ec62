"""Pydantic models for catalog file records."""
from typing import List, Optional

from pydantic import BaseModel, model_validator


class CayleyRecord(BaseModel):
    """{"name", "order", "table"} with 0-based row-major entries."""
    name: str
    order: int
    table: List[List[int]]
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def check_dimensions(self):
        if self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")
        if len(self.table) != self.order:
            raise ValueError(f"table has {len(self.table)} rows, order is {self.order}")
        for i, row in enumerate(self.table):
            if len(row) != self.order:
                raise ValueError(f"row {i} has {len(row)} entries, order is {self.order}")
        if self.labels is not None and len(self.labels) != self.order:
            raise ValueError(f"{len(self.labels)} labels for order {self.order}")
        return self


class GeneratorRecord(BaseModel):
    """{"name", "degree", "generators"}: permutations as 0-based image lists."""
    name: str
    degree: int
    generators: List[List[int]]

    @model_validator(mode="after")
    def check_degrees(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        for i, images in enumerate(self.generators):
            if len(images) != self.degree:
                raise ValueError(f"generator {i} has {len(images)} images, degree is {self.degree}")
        return self
