"""Subgroup machinery over a GroupTable.

All routines work on boolean numpy masks internally and hand back
ElementSet / Subgroup bitsets.
"""
from typing import Iterable, List, Tuple

import numpy as np

from app.domain.element_set import ElementSet, Subgroup
from app.domain.group_table import GroupTable


def _close(G: GroupTable, mask: np.ndarray, gens: List[int]) -> np.ndarray:
    """Grow mask (already a subgroup) to the subgroup generated with gens."""
    frontier = np.flatnonzero(mask)
    gens_arr = np.asarray(gens, dtype=np.int64)
    while len(frontier):
        products = np.unique(G.mul[np.ix_(frontier, gens_arr)])
        new = products[~mask[products]]
        mask[new] = True
        frontier = new
    return mask


def generate_with_generators(G: GroupTable, elements: Iterable[int]) -> Tuple[Subgroup, Tuple[int, ...]]:
    """Subgroup generated by elements, plus the subset of them that was needed.

    Elements are taken in the given order; one is kept as a generator only if
    it is not already in the subgroup generated by the earlier ones.
    """
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens: List[int] = []
    for x in elements:
        x = int(x)
        if mask[x]:
            continue
        gens.append(x)
        mask = _close(G, mask, gens)
    return Subgroup.from_mask(mask), tuple(gens)


def subgroup_generated(G: GroupTable, S: ElementSet) -> Subgroup:
    """Smallest subgroup containing S ({identity} when S is empty)."""
    subgroup, _ = generate_with_generators(G, S.indices())
    return subgroup


def generators_of(G: GroupTable, H: ElementSet) -> Tuple[int, ...]:
    """A small generating set of <H> (memoized per set)."""
    if H.bits == (1 << G.order) - 1:
        return group_generators(G)
    return G.memoized(
        ("generators", H.bits),
        lambda: generate_with_generators(G, H.indices())[1],
    )


def group_generators(G: GroupTable) -> Tuple[int, ...]:
    """Generating set of G: the retained one, else a greedy one (memoized)."""
    if G.generators is not None:
        return G.generators
    return G.memoized(
        "generators",
        lambda: generate_with_generators(G, range(G.order))[1],
    )


def conjugation_closure(G: GroupTable, seeds: Iterable[int], conjugators: Iterable[int]) -> ElementSet:
    """Smallest set containing seeds and closed under conjugation by conjugators."""
    mask = np.zeros(G.order, dtype=bool)
    frontier = np.unique(np.asarray(list(seeds), dtype=np.int64))
    mask[frontier] = True
    conjugators = [int(g) for g in conjugators]
    while len(frontier) and conjugators:
        images = np.unique(np.concatenate([G.conjugate_all(frontier, g) for g in conjugators]))
        new = images[~mask[images]]
        mask[new] = True
        frontier = new
    return ElementSet.from_mask(mask)


def normal_closure(G: GroupTable, S: ElementSet) -> Subgroup:
    """Smallest normal subgroup of G containing S."""
    orbit = conjugation_closure(G, S.indices(), group_generators(G))
    return subgroup_generated(G, orbit)


def centralizer(G: GroupTable, S: ElementSet, within: ElementSet) -> Subgroup:
    """{h in within : hs = sh for all s in S}.

    S is reduced to a generating set of <S> first; the result is a subgroup
    whenever `within` is.
    """
    candidates = within.indices()
    for s in generators_of(G, S):
        candidates = candidates[G.mul[candidates, s] == G.mul[s, candidates]]
    return ElementSet.from_indices(G.order, candidates).as_subgroup()


def element_centralizer(G: GroupTable, x: int) -> Subgroup:
    """C_G(x)."""
    everything = np.arange(G.order)
    mask = G.mul[everything, x] == G.mul[x, everything]
    return Subgroup.from_mask(mask)


def center(G: GroupTable, H: ElementSet) -> Subgroup:
    """Z(H) = C_H(H)."""
    return centralizer(G, H, H)


def group_center(G: GroupTable) -> Subgroup:
    """Z(G), memoized on the table."""
    return G.memoized("center", lambda: center(G, G.all_elements()))


def is_subgroup(G: GroupTable, S: ElementSet) -> bool:
    """Identity, closure and inverse test."""
    if 0 not in S:
        return False
    mask = S.mask()
    members = np.flatnonzero(mask)
    if not mask[G.inv[members]].all():
        return False
    return bool(mask[G.mul[np.ix_(members, members)]].all())


def is_normal_subset(G: GroupTable, S: ElementSet, under: ElementSet) -> bool:
    """True iff u^-1 S u is contained in S for every u in `under`.

    When `under` is a subgroup it is enough to test a generating set.
    """
    mask = S.mask()
    members = np.flatnonzero(mask)
    if len(members) == 0:
        return True
    if isinstance(under, Subgroup) or is_subgroup(G, under):
        conjugators = generators_of(G, under)
    else:
        conjugators = under.indices()
    for u in conjugators:
        if not mask[G.conjugate_all(members, int(u))].all():
            return False
    return True


def is_normal_subgroup(G: GroupTable, S: ElementSet) -> bool:
    """Subgroup test plus g^-1 S g = S for all g in G."""
    return is_subgroup(G, S) and is_normal_subset(G, S, G.all_elements())


def join(G: GroupTable, A: ElementSet, B: ElementSet) -> Subgroup:
    """<A, B>."""
    return subgroup_generated(G, A | B)
