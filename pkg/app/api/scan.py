"""Batch scan endpoint."""
from typing import List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from app.catalog.builtin import builtin_catalog
from app.config import Settings
from app.domain.errors import GroupError
from app.domain.report import Statement
from app.orchestrator.scan_orchestrator import scan

router = APIRouter(prefix="/api", tags=["scan"])


class ScanRequest(BaseModel):
    builtin_max_order: int = Field(default=32, ge=1)
    statements: List[str] = Field(default_factory=lambda: ["all"])
    oracle_cap: Optional[int] = None


@router.post("/scan", response_model=dict)
async def scan_builtin(request: ScanRequest):
    """Scan the built-in catalog and return the structured report."""
    try:
        if "all" in request.statements:
            statements = list(Statement)
        else:
            statements = [Statement.parse(s) for s in request.statements]
    except ValueError as e:
        raise HTTPException(status_code=404, detail=str(e))
    if not statements:
        raise HTTPException(status_code=400, detail="No statements selected")
    try:
        settings = Settings.from_env().with_overrides(oracle_cap=request.oracle_cap)
        groups = builtin_catalog(request.builtin_max_order, settings)
    except (GroupError, ValueError) as e:
        raise HTTPException(status_code=400, detail=str(e))
    return scan(groups, statements, settings).to_dict()
