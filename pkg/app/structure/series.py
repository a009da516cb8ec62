"""Commutator subgroups and the lower central, upper central and derived series."""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple
import logging

import numpy as np

from app.domain.element_set import ElementSet, Subgroup
from app.domain.group_table import GroupTable
from app.groups.subgroups import (
    conjugation_closure, generators_of, group_center, subgroup_generated,
)
from app.structure.classes import commutator_set

logger = logging.getLogger(__name__)


class SeriesKind(str, Enum):
    LOWER_CENTRAL = "lower_central"
    UPPER_CENTRAL = "upper_central"
    DERIVED = "derived"


@dataclass(frozen=True)
class Series:
    """A chain of subgroups.

    The chain stops at its natural end (trivial group for descending series,
    the whole subgroup for the upper central series) or as soon as a term
    repeats; in the latter case the repeated term is stored twice.
    """
    terms: Tuple[Subgroup, ...]
    kind: SeriesKind

    @property
    def last(self) -> Subgroup:
        return self.terms[-1]

    def __len__(self) -> int:
        return len(self.terms)

    def orders(self) -> list:
        return [len(t) for t in self.terms]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "orders": self.orders()}


def commutator_subgroup(G: GroupTable, A: ElementSet, B: ElementSet) -> Subgroup:
    """[A, B] for subgroups A and B.

    Computed as the normal closure in <A, B> of the commutators of
    generators of A with generators of B.
    """
    gens_a = generators_of(G, A)
    gens_b = generators_of(G, B)
    if not gens_a or not gens_b:
        return G.trivial_subgroup()
    a = np.asarray(gens_a, dtype=np.int64)[:, None]
    b = np.asarray(gens_b, dtype=np.int64)[None, :]
    seeds = G.mul[G.mul[G.inv[a], G.inv[b]], G.mul[a, b]].ravel()
    orbit = conjugation_closure(G, seeds, gens_a + gens_b)
    return subgroup_generated(G, orbit)


def lower_central_series(G: GroupTable, H: Subgroup) -> Series:
    """gamma_1(H) = H, gamma_{n+1}(H) = [gamma_n(H), H]."""
    terms = [H]
    current = H
    while not current.is_trivial():
        following = commutator_subgroup(G, current, H)
        terms.append(following)
        if following == current:
            break
        current = following
    return Series(tuple(terms), SeriesKind.LOWER_CENTRAL)


def _next_center(G: GroupTable, H: Subgroup, Z: Subgroup) -> Subgroup:
    """{x in H : [x, h] in Z for all h in H}."""
    z_mask = Z.mask()
    candidates = H.indices()
    for h in generators_of(G, H):
        comms = G.mul[G.mul[G.inv[candidates], G.inv[h]], G.mul[candidates, h]]
        candidates = candidates[z_mask[comms]]
    return ElementSet.from_indices(G.order, candidates).as_subgroup()


def upper_central_series(G: GroupTable, H: Subgroup) -> Series:
    """Z_0 = 1, Z_{i+1} = {x in H : [x, H] in Z_i}, without quotients."""
    current = G.trivial_subgroup()
    terms = [current]
    while current != H:
        following = _next_center(G, H, current)
        terms.append(following)
        if following == current:
            break
        current = following
    return Series(tuple(terms), SeriesKind.UPPER_CENTRAL)


def nilpotency_class(G: GroupTable, H: Subgroup) -> Optional[int]:
    """Smallest c with gamma_{c+1}(H) = 1, or None if H is not nilpotent."""
    series = lower_central_series(G, H)
    if series.last.is_trivial():
        return len(series) - 1
    return None


def is_nilpotent(G: GroupTable, H: Subgroup) -> bool:
    return nilpotency_class(G, H) is not None


def derived_series_and_solvability(G: GroupTable, H: Subgroup) -> Tuple[Series, bool]:
    """H, [H, H], [[H, H], [H, H]], ... and whether it reaches 1."""
    terms = [H]
    current = H
    while not current.is_trivial():
        following = commutator_subgroup(G, current, current)
        terms.append(following)
        if following == current:
            break
        current = following
    series = Series(tuple(terms), SeriesKind.DERIVED)
    return series, series.last.is_trivial()


def is_solvable(G: GroupTable) -> bool:
    """Solvability of the whole group (memoized)."""
    return G.memoized("solvable", lambda: derived_series_and_solvability(G, G.all_elements())[1])


def group_nilpotency_class(G: GroupTable) -> Optional[int]:
    return G.memoized("nilpotency_class", lambda: nilpotency_class(G, G.all_elements()))


def second_center(G: GroupTable, H: Subgroup) -> Subgroup:
    """Z_2(H); equals H when H is abelian."""
    series = upper_central_series(G, H)
    return series.terms[min(2, len(series) - 1)]


def commutator_generation_identity(G: GroupTable) -> bool:
    """gamma_2(G) is generated by the sets [x, G] with x non-central."""
    whole = G.all_elements()
    non_central = (whole - group_center(G)).indices()
    bits = 1
    for x in non_central:
        bits |= commutator_set(G, int(x), whole).bits
    generated = subgroup_generated(G, ElementSet(G.order, bits))
    return generated == commutator_subgroup(G, whole, whole)
