"""Errors raised by group construction, parsing and oracles.

Every error is a ValueError so callers that only care about "bad input"
can keep catching that.
"""
from typing import Optional, Tuple


class GroupError(ValueError):
    """Base class for all domain errors."""


class NotLatinSquare(GroupError):
    """A row or column of the table is not a permutation."""

    def __init__(self, axis: str, index: int):
        self.axis = axis
        self.index = index
        super().__init__(f"Table is not a Latin square: {axis} {index} repeats an entry")


class NoIdentity(GroupError):
    def __init__(self):
        super().__init__("Table has no two-sided identity element")


class MissingInverse(GroupError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"Element {element} has no two-sided inverse")


class NotAssociative(GroupError):
    """First triple (a, b, c) with (ab)c != a(bc)."""

    def __init__(self, triple: Tuple[int, int, int]):
        self.triple = triple
        a, b, c = triple
        super().__init__(f"Table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class OrderCapExceeded(GroupError):
    def __init__(self, cap: int, order: Optional[int] = None):
        self.cap = cap
        self.order = order
        detail = f" (order {order})" if order is not None else ""
        super().__init__(f"Group order exceeds configured cap {cap}{detail}")


class ParameterOutOfRange(GroupError):
    """A family parameter is outside the family's bounds."""


class OracleCapExceeded(GroupError):
    def __init__(self, cap: int, classes: int):
        self.cap = cap
        self.classes = classes
        super().__init__(f"Group has {classes} conjugacy classes, oracle cap is {cap}")


class OracleInconsistency(GroupError):
    """Nilpotent normal subgroups whose product escapes the maximal one."""


class ParseError(GroupError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownFamily(ParseError):
    def __init__(self, name: str, position: int):
        self.name = name
        super().__init__(f"Unknown group family {name!r}", position)


class CatalogIOError(GroupError):
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"Cannot read catalog {path}: {reason}")


class CatalogFormatError(GroupError):
    def __init__(self, record_index: int, reason: str):
        self.record_index = record_index
        super().__init__(f"Record {record_index}: {reason}")


class CatalogValidationError(GroupError):
    def __init__(self, record_index: int, reason: str):
        self.record_index = record_index
        self.reason = reason
        super().__init__(f"Record {record_index}: invalid group: {reason}")


class ReportIOError(GroupError):
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"Cannot write {path}: {reason}")
