"""GroupTable domain model: a finite group as a complete Cayley table."""
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Optional, Tuple
import threading

import numpy as np

from .element_set import ElementSet, Subgroup


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its multiplication table.

    Element 0 is always the identity. Tables are immutable once built;
    derived values (classes, center, Fitting subgroup, ...) are memoized per
    instance behind a lock so each one is computed exactly once.
    """
    name: str
    mul: np.ndarray  # order x order, mul[a, b] = a*b
    inv: np.ndarray
    labels: Optional[Tuple[str, ...]] = None
    generators: Optional[Tuple[int, ...]] = None  # retained generating set, if known
    _memo: Dict[Hashable, Any] = field(default_factory=dict, repr=False)
    _lock: Any = field(default_factory=threading.RLock, repr=False)

    def __post_init__(self):
        """Freeze the arrays and check shapes."""
        mul = np.ascontiguousarray(self.mul, dtype=np.int32)
        inv = np.ascontiguousarray(self.inv, dtype=np.int32)
        n = mul.shape[0]
        if mul.ndim != 2 or mul.shape != (n, n) or n < 1:
            raise ValueError(f"Multiplication table must be a non-empty square matrix, got shape {mul.shape}")
        if inv.shape != (n,):
            raise ValueError(f"Inverse array must have length {n}, got shape {inv.shape}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError(f"Expected {n} labels, got {len(self.labels)}")
        mul.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "inv", inv)

    @property
    def order(self) -> int:
        """Number of elements."""
        return int(self.mul.shape[0])

    def is_trivial(self) -> bool:
        return self.order == 1

    # element arithmetic

    def product(self, a: int, b: int) -> int:
        """a*b."""
        return int(self.mul[a, b])

    def inverse(self, x: int) -> int:
        """x^-1."""
        return int(self.inv[x])

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return int(self.mul[self.mul[self.inv[g], x], g])

    def commutator(self, x: int, h: int) -> int:
        """[x, h] = x^-1 h^-1 x h."""
        return int(self.mul[self.mul[self.inv[x], self.inv[h]], self.mul[x, h]])

    def conjugate_all(self, xs: np.ndarray, g: int) -> np.ndarray:
        """g^-1 x g for every x in xs."""
        return self.mul[self.mul[self.inv[g], xs], g]

    def label(self, x: int) -> str:
        """Display label of x: the stored label, else "e" for the identity and the index otherwise."""
        if self.labels is not None:
            return self.labels[x]
        return "e" if x == 0 else str(x)

    # whole-group sets

    def all_elements(self) -> Subgroup:
        """G itself as a Subgroup."""
        return Subgroup(self.order, (1 << self.order) - 1)

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup.trivial(self.order)

    def element_set(self, indices) -> ElementSet:
        """ElementSet of this group from member indices."""
        return ElementSet.from_indices(self.order, indices)

    # memo

    def memoized(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """Return the cached value for key, computing it once."""
        with self._lock:
            if key not in self._memo:
                self._memo[key] = factory()
            return self._memo[key]

    # serialization

    def to_dict(self) -> dict:
        """Cayley table file format."""
        data = {
            "name": self.name,
            "order": self.order,
            "table": self.mul.tolist(),
        }
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    def same_table(self, other: "GroupTable") -> bool:
        """True iff both tables are identical (not merely isomorphic)."""
        return self.order == other.order and bool(np.array_equal(self.mul, other.mul))

    def table_digest(self) -> bytes:
        """Raw table bytes; the catalog deduplication key together with the order."""
        return self.mul.tobytes()

    def __getstate__(self):
        return {
            "name": self.name,
            "mul": self.mul,
            "inv": self.inv,
            "labels": self.labels,
            "generators": self.generators,
        }

    def __setstate__(self, state):
        for key, value in state.items():
            object.__setattr__(self, key, value)
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)
        object.__setattr__(self, "_memo", {})
        object.__setattr__(self, "_lock", threading.RLock())

    def __repr__(self) -> str:
        return f"GroupTable(name={self.name!r}, order={self.order})"
