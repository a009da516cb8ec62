"""Catalog file loader.

A catalog is a JSON array whose items are Cayley-table records or
permutation-generator records. Every group is validated on load.
"""
from pathlib import Path
from typing import List, Optional, Union
import json
import logging

from pydantic import ValidationError

from app.config import Settings
from app.data_import.records import CayleyRecord, GeneratorRecord
from app.domain.errors import (
    CatalogFormatError, CatalogIOError, CatalogValidationError, GroupError,
)
from app.domain.group_table import GroupTable
from app.domain.perm import Perm
from app.groups.table_builder import build_from_cayley, build_from_generators

logger = logging.getLogger(__name__)


def _read_json(path: Union[str, Path]):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise CatalogIOError(str(path), e.strerror or str(e))
    if not text.strip():
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise CatalogFormatError(0, f"invalid JSON: {e}")


def parse_record(index: int, data, settings: Optional[Settings] = None) -> GroupTable:
    """Build one group from a decoded record.

    Raises:
        CatalogFormatError: the record has the wrong shape
        CatalogValidationError: the record does not describe a group
    """
    if not isinstance(data, dict):
        raise CatalogFormatError(index, f"expected an object, got {type(data).__name__}")
    try:
        if "table" in data:
            record = CayleyRecord.model_validate(data)
        elif "generators" in data:
            record = GeneratorRecord.model_validate(data)
        else:
            raise CatalogFormatError(index, "record has neither 'table' nor 'generators'")
    except ValidationError as e:
        raise CatalogFormatError(index, str(e))

    try:
        if isinstance(record, CayleyRecord):
            return build_from_cayley(record.table, record.name, record.order,
                                     labels=record.labels, settings=settings)
        perms = [Perm.from_list(images) for images in record.generators]
        return build_from_generators(perms, record.name, settings)
    except (GroupError, ValueError) as e:
        logger.warning(f"Record {index} ({record.name}) rejected: {e}")
        raise CatalogValidationError(index, str(e))


def load_catalog(path: Union[str, Path], settings: Optional[Settings] = None) -> List[GroupTable]:
    """Load and validate every group in a catalog file.

    An empty file is an empty catalog. Records whose table is identical to an
    earlier record's are dropped with a warning.

    Raises:
        CatalogIOError, CatalogFormatError, CatalogValidationError
    """
    data = _read_json(path)
    if data is None:
        return []
    if not isinstance(data, list):
        raise CatalogFormatError(0, "catalog must be a JSON array of records")

    groups: List[GroupTable] = []
    seen = {}
    for index, item in enumerate(data):
        group = parse_record(index, item, settings)
        digest = (group.order, group.table_digest())
        if digest in seen:
            logger.warning(f"{path}: record {index} ({group.name}) duplicates {seen[digest]}, skipped")
            continue
        seen[digest] = group.name
        groups.append(group)
    logger.info(f"Loaded {len(groups)} groups from {path}")
    return groups


def load_group_file(path: Union[str, Path], settings: Optional[Settings] = None) -> GroupTable:
    """Load a single group: one record object, or a catalog holding exactly one group."""
    data = _read_json(path)
    if isinstance(data, list):
        groups = load_catalog(path, settings)
        if len(groups) != 1:
            raise CatalogFormatError(0, f"{path} holds {len(groups)} groups, expected one")
        return groups[0]
    if data is None:
        raise CatalogFormatError(0, f"{path} is empty")
    return parse_record(0, data, settings)

