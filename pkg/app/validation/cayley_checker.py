"""Cayley table checker: Latin square, identity, inverses, associativity."""
from typing import Optional, Sequence, Tuple
import logging

import numpy as np

from app.config import Settings
from app.domain.errors import (
    GroupError, MissingInverse, NoIdentity, NotAssociative, NotLatinSquare,
)

logger = logging.getLogger(__name__)

# randomized associativity triples per element pair for large tables
SAMPLES_PER_PAIR = 10
SAMPLE_CHUNK = 1 << 18


class CayleyChecker:
    """Validates a raw multiplication table and normalizes it.

    Checks run in a fixed order (range, Latin square, identity, inverses,
    associativity) and raise on the first failure.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()

    def normalize(self, table, labels: Optional[Sequence[str]] = None,
                  assume_associative: bool = False
                  ) -> Tuple[np.ndarray, np.ndarray, Optional[Tuple[str, ...]]]:
        """Validate table and relabel so the identity is element 0.

        Args:
            table: square matrix of 0-based entries
            labels: optional per-element labels, permuted along with the table
            assume_associative: skip the associativity scan (closure-built tables)

        Returns:
            (mul, inv, labels) with the identity at index 0
        """
        mul = self.check_shape(table)
        self.check_latin(mul)
        identity = self.find_identity(mul)
        if identity != 0:
            logger.debug(f"Relabeling identity {identity} -> 0")
            mul, labels = self.relabel_identity(mul, identity, labels)
        inv = self.compute_inverses(mul)
        if not assume_associative:
            self.check_associativity(mul)
        return mul, inv, tuple(labels) if labels is not None else None

    @staticmethod
    def check_shape(table) -> np.ndarray:
        try:
            mul = np.asarray(table, dtype=np.int64)
        except (TypeError, ValueError) as e:
            raise GroupError(f"Table is not a rectangular integer matrix: {e}")
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise GroupError(f"Table must be a non-empty square matrix, got shape {mul.shape}")
        n = mul.shape[0]
        bad = np.argwhere((mul < 0) | (mul >= n))
        if len(bad):
            i, j = (int(v) for v in bad[0])
            raise GroupError(f"Table entry [{i}][{j}] = {int(mul[i, j])} outside [0, {n})")
        return mul

    @staticmethod
    def check_latin(mul: np.ndarray):
        n = mul.shape[0]
        expected = np.arange(n)
        rows_ok = (np.sort(mul, axis=1) == expected).all(axis=1)
        if not rows_ok.all():
            raise NotLatinSquare("row", int(np.argmin(rows_ok)))
        cols_ok = (np.sort(mul, axis=0) == expected[:, None]).all(axis=0)
        if not cols_ok.all():
            raise NotLatinSquare("column", int(np.argmin(cols_ok)))

    @staticmethod
    def find_identity(mul: np.ndarray) -> int:
        n = mul.shape[0]
        expected = np.arange(n)
        left = (mul == expected[None, :]).all(axis=1)   # e*x = x
        right = (mul == expected[:, None]).all(axis=0)  # x*e = x
        candidates = np.flatnonzero(left & right)
        if len(candidates) == 0:
            raise NoIdentity()
        return int(candidates[0])

    @staticmethod
    def relabel_identity(mul: np.ndarray, identity: int,
                         labels: Optional[Sequence[str]] = None):
        """Swap element `identity` with element 0."""
        perm = np.arange(mul.shape[0])
        perm[0], perm[identity] = identity, 0
        relabeled = perm[mul[np.ix_(perm, perm)]]
        if labels is not None:
            labels = [labels[int(i)] for i in perm]
        return relabeled, labels

    @staticmethod
    def compute_inverses(mul: np.ndarray) -> np.ndarray:
        inv = np.argmax(mul == 0, axis=1)
        left_ok = mul[inv, np.arange(mul.shape[0])] == 0
        if not left_ok.all():
            raise MissingInverse(int(np.argmin(left_ok)))
        return inv

    def check_associativity(self, mul: np.ndarray):
        n = mul.shape[0]
        if n <= self.settings.exhaustive_assoc_limit:
            self._exhaustive_associativity(mul)
        else:
            self._sampled_associativity(mul)

    @staticmethod
    def _exhaustive_associativity(mul: np.ndarray):
        for a in range(mul.shape[0]):
            left = mul[mul[a]]   # [b, c] -> (ab)c
            right = mul[a][mul]  # [b, c] -> a(bc)
            bad = np.argwhere(left != right)
            if len(bad):
                b, c = (int(v) for v in bad[0])
                raise NotAssociative((a, b, c))

    def _sampled_associativity(self, mul: np.ndarray):
        n = mul.shape[0]
        rng = np.random.default_rng(self.settings.assoc_seed)
        remaining = SAMPLES_PER_PAIR * n * n
        logger.info(f"Order {n} above exhaustive limit, sampling {remaining} triples")
        while remaining > 0:
            size = min(remaining, SAMPLE_CHUNK)
            a, b, c = rng.integers(0, n, size=(3, size))
            bad = np.flatnonzero(mul[mul[a, b], c] != mul[a, mul[b, c]])
            if len(bad):
                k = bad[0]
                raise NotAssociative((int(a[k]), int(b[k]), int(c[k])))
            remaining -= size
