"""Group info and statement-check endpoints."""
from typing import List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel

from app.catalog.spec_parser import parse_group_spec
from app.config import Settings
from app.domain.errors import GroupError
from app.domain.report import Statement
from app.orchestrator.scan_orchestrator import group_summary, run_statement

router = APIRouter(prefix="/api/groups", tags=["groups"])


class CheckRequest(BaseModel):
    spec: str
    statement: str
    witness_search: bool = False
    oracle_cap: Optional[int] = None


def _build(spec_text: str, settings: Settings):
    try:
        spec = parse_group_spec(spec_text)
        return spec, spec.build(settings)
    except GroupError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/info", response_model=dict)
async def group_info(spec: str):
    """Order, class sizes, Z(G), M(G), F(G) and solvability of a group."""
    settings = Settings.from_env()
    parsed, G = _build(spec, settings)
    summary = group_summary(G).to_dict()
    summary.pop("reports")
    summary.pop("errors")
    return {"spec": parsed.render(), **summary}


@router.post("/check", response_model=List[dict])
async def check_statement(request: CheckRequest):
    """Run one statement on one group."""
    try:
        statement = Statement.parse(request.statement)
    except ValueError as e:
        raise HTTPException(status_code=404, detail=str(e))
    try:
        settings = Settings.from_env().with_overrides(oracle_cap=request.oracle_cap)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    _, G = _build(request.spec, settings)
    reports = run_statement(G, statement, settings, witness_search=request.witness_search)
    return [report.to_dict() for report in reports]
