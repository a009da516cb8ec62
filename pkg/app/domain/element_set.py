"""Bitset-backed subsets of a group's elements.

Members are stored in a Python int, one bit per element, so union,
intersection and complement are word-parallel. numpy masks are the bridge
to table lookups.
"""
from typing import Iterable, Iterator

import numpy as np


def mask_to_bits(mask: np.ndarray) -> int:
    """Pack a boolean mask (element i -> bit i) into an int."""
    packed = np.packbits(np.asarray(mask, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def bits_to_mask(bits: int, size: int) -> np.ndarray:
    """Unpack an int into a boolean mask of length size."""
    raw = bits.to_bytes(max((size + 7) // 8, 1), "little")
    unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return unpacked[:size].astype(bool)


class ElementSet:
    """A subset of [0, parent_order)."""

    __slots__ = ("parent_order", "bits")

    def __init__(self, parent_order: int, bits: int = 0):
        if parent_order < 1:
            raise ValueError(f"parent_order must be positive, got {parent_order}")
        if bits < 0 or bits.bit_length() > parent_order:
            raise ValueError(f"Bits outside [0, {parent_order})")
        self.parent_order = parent_order
        self.bits = bits

    # construction

    @classmethod
    def empty(cls, parent_order: int) -> "ElementSet":
        """The empty subset."""
        return cls(parent_order, 0)

    @classmethod
    def full(cls, parent_order: int) -> "ElementSet":
        """Every element of the group."""
        return cls(parent_order, (1 << parent_order) - 1)

    @classmethod
    def from_indices(cls, parent_order: int, indices: Iterable[int]) -> "ElementSet":
        """Build from element indices.

        Args:
            parent_order: Order of the group the set lives in
            indices: Member indices, duplicates allowed

        Raises:
            ValueError: an index outside [0, parent_order)
        """
        bits = 0
        for i in indices:
            i = int(i)
            if not 0 <= i < parent_order:
                raise ValueError(f"Element {i} outside [0, {parent_order})")
            bits |= 1 << i
        return cls(parent_order, bits)

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "ElementSet":
        """Build from a boolean mask; parent_order is the mask length."""
        return cls(len(mask), mask_to_bits(mask))

    # views

    def mask(self) -> np.ndarray:
        """Boolean mask of length parent_order."""
        return bits_to_mask(self.bits, self.parent_order)

    def indices(self) -> np.ndarray:
        """Members in increasing order as an int64 array."""
        return np.flatnonzero(self.mask())

    def to_list(self) -> list:
        """Members as plain ints, increasing."""
        return [int(i) for i in self.indices()]

    def as_subgroup(self) -> "Subgroup":
        """Re-tag as a Subgroup. The caller vouches for closure."""
        return Subgroup(self.parent_order, self.bits)

    # set protocol

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_list())

    def __contains__(self, element: int) -> bool:
        return 0 <= element < self.parent_order and (self.bits >> int(element)) & 1 == 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "ElementSet"):
        if self.parent_order != other.parent_order:
            raise ValueError(
                f"Sets belong to groups of different orders ({self.parent_order}, {other.parent_order})")

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.parent_order, self.bits | other.bits)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.parent_order, self.bits & other.bits)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.parent_order, self.bits & ~other.bits)

    def complement(self) -> "ElementSet":
        """Elements of the group not in this set."""
        return ElementSet(self.parent_order, ((1 << self.parent_order) - 1) & ~self.bits)

    def issubset(self, other: "ElementSet") -> bool:
        """True iff every member is also in other.

        Raises:
            ValueError: the sets belong to groups of different orders
        """
        self._check(other)
        return self.bits & ~other.bits == 0

    __le__ = issubset

    def min(self) -> int:
        """Smallest member.

        Raises:
            ValueError: the set is empty
        """
        if not self.bits:
            raise ValueError("min() of an empty ElementSet")
        return (self.bits & -self.bits).bit_length() - 1

    # equality ignores the Subgroup tag

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.parent_order == other.parent_order and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.parent_order, self.bits))

    def sort_key(self) -> tuple:
        """(cardinality, bitset) ordering used for deterministic listings."""
        return (len(self), self.bits)

    def __repr__(self) -> str:
        members = self.to_list()
        shown = members if len(members) <= 12 else members[:12] + ["..."]
        return f"{type(self).__name__}(order={len(members)}, members={shown})"

    def __getstate__(self):
        return (self.parent_order, self.bits)

    def __setstate__(self, state):
        self.parent_order, self.bits = state


class Subgroup(ElementSet):
    """An ElementSet known to be closed under multiplication and inverses."""

    __slots__ = ()

    @property
    def order(self) -> int:
        return len(self)

    def is_trivial(self) -> bool:
        """True for the identity subgroup."""
        return self.bits == 1

    @classmethod
    def trivial(cls, parent_order: int) -> "Subgroup":
        return cls(parent_order, 1)
