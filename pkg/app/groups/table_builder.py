"""Builders producing validated GroupTables from tables or permutations."""
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np

from app.config import Settings
from app.domain.errors import GroupError, OrderCapExceeded
from app.domain.group_table import GroupTable
from app.domain.perm import Perm
from app.validation.cayley_checker import CayleyChecker

logger = logging.getLogger(__name__)


def build_from_cayley(table, name: str, order: Optional[int] = None,
                      labels: Optional[Sequence[str]] = None,
                      settings: Optional[Settings] = None,
                      generators: Optional[Sequence[int]] = None) -> GroupTable:
    """Validate a Cayley table and build a GroupTable from it.

    If the identity is not element 0, the elements are relabeled so it is.
    `generators` is only kept when no relabeling was needed.

    Raises:
        NotLatinSquare, NoIdentity, MissingInverse, NotAssociative,
        OrderCapExceeded, GroupError (malformed table)
    """
    settings = settings or Settings()
    rows = len(table)
    if order is not None and order != rows:
        raise GroupError(f"Declared order {order} does not match table with {rows} rows")
    if rows > settings.max_order:
        raise OrderCapExceeded(settings.max_order, rows)
    checker = CayleyChecker(settings)
    mul, inv, labels = checker.normalize(table, labels)
    if generators is not None and checker.find_identity(np.asarray(table)) != 0:
        generators = None
    if generators is not None:
        generators = tuple(sorted({int(g) for g in generators} - {0}))
    return GroupTable(name=name, mul=mul, inv=inv, labels=labels, generators=generators)


def _lookup_rows(rows: np.ndarray, index_of: Dict[bytes, int]) -> np.ndarray:
    return np.fromiter((index_of[r.tobytes()] for r in rows), dtype=np.int32, count=len(rows))


def closure_elements(perms: Sequence[Perm], max_order: int) -> List[Tuple[int, ...]]:
    """Breadth-first closure of perms under composition, identity first."""
    degree = perms[0].degree
    gens = [p.images for p in perms]
    identity = tuple(range(degree))
    seen = {identity: 0}
    elements = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            product = tuple(g[i] for i in current)  # current, then g
            if product not in seen:
                if len(elements) >= max_order:
                    raise OrderCapExceeded(max_order)
                seen[product] = len(elements)
                elements.append(product)
                queue.append(product)
    return elements


def table_from_elements(elements: Sequence[Tuple[int, ...]]) -> np.ndarray:
    """Multiplication table of a closed list of permutations (apply a, then b)."""
    points = np.asarray(elements, dtype=np.int64)
    n, degree = points.shape
    mul = np.empty((n, n), dtype=np.int32)
    if degree > 0 and degree * np.log2(max(degree, 2)) < 62:
        powers = degree ** np.arange(degree, dtype=np.int64)
        keys = points @ powers
        order = np.argsort(keys)
        sorted_keys = keys[order]
        for a in range(n):
            product_keys = points[:, points[a]] @ powers
            mul[a] = order[np.searchsorted(sorted_keys, product_keys)]
    else:
        index_of = {row.tobytes(): i for i, row in enumerate(points)}
        for a in range(n):
            mul[a] = _lookup_rows(np.ascontiguousarray(points[:, points[a]]), index_of)
    return mul


def build_from_generators(perms: Sequence[Perm], name: str,
                          settings: Optional[Settings] = None) -> GroupTable:
    """Close the permutations under composition and tabulate the result.

    An empty generator list gives the trivial group. Element 0 is the
    identity permutation and the generators are retained on the table.

    Raises:
        OrderCapExceeded: closure grows past settings.max_order
        GroupError: generators of different degrees
    """
    settings = settings or Settings()
    perms = list(perms)
    if not perms:
        return GroupTable(name=name, mul=np.zeros((1, 1), dtype=np.int32),
                          inv=np.zeros(1, dtype=np.int32), labels=("()",), generators=())
    degrees = {p.degree for p in perms}
    if len(degrees) != 1:
        raise GroupError(f"Generators have different degrees: {sorted(degrees)}")

    elements = closure_elements(perms, settings.max_order)
    mul = table_from_elements(elements)
    inv = np.argmax(mul == 0, axis=1)
    position = {e: i for i, e in enumerate(elements)}
    generators = tuple(sorted({position[p.images] for p in perms} - {0}))
    labels = tuple(Perm(e).cycle_notation() for e in elements)
    logger.debug(f"Closed {len(perms)} generators of degree {degrees.pop()} into order {len(elements)}")
    return GroupTable(name=name, mul=mul, inv=inv, labels=labels, generators=generators)
