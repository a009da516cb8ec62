"""Conjugacy classes, H-classes, commutator sets, small elements and M(G)."""
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx
import numpy as np

from app.domain.element_set import ElementSet, Subgroup
from app.domain.group_table import GroupTable
from app.groups.subgroups import group_generators, subgroup_generated


@dataclass(frozen=True, eq=False)
class ClassPartition:
    """Conjugacy classes ordered by (size, smallest member)."""
    classes: Tuple[ElementSet, ...]
    representatives: Tuple[int, ...]
    sizes: Tuple[int, ...]
    class_index: np.ndarray  # element -> position in classes

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, x: int) -> ElementSet:
        return self.classes[int(self.class_index[x])]

    def distinct_sizes(self) -> List[int]:
        return sorted(set(self.sizes))

    def to_dict(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "representatives": list(self.representatives),
            "classes": [c.to_list() for c in self.classes],
        }


def _orbit_components(G: GroupTable) -> List[List[int]]:
    """Orbits of the conjugation action, as components of the action graph."""
    graph = nx.Graph()
    everything = np.arange(G.order)
    graph.add_nodes_from(range(G.order))
    for g in group_generators(G):
        images = G.conjugate_all(everything, g)
        graph.add_edges_from(zip(everything.tolist(), images.tolist()))
    return [sorted(component) for component in nx.connected_components(graph)]


def conjugacy_classes(G: GroupTable) -> ClassPartition:
    """Full class partition of G (memoized on the table)."""
    def compute() -> ClassPartition:
        orbits = sorted(_orbit_components(G), key=lambda c: (len(c), c[0]))
        class_index = np.empty(G.order, dtype=np.int32)
        for k, orbit in enumerate(orbits):
            class_index[orbit] = k
        class_index.setflags(write=False)
        return ClassPartition(
            classes=tuple(ElementSet.from_indices(G.order, orbit) for orbit in orbits),
            representatives=tuple(orbit[0] for orbit in orbits),
            sizes=tuple(len(orbit) for orbit in orbits),
            class_index=class_index,
        )
    return G.memoized("classes", compute)


def h_class(G: GroupTable, x: int, H: ElementSet) -> ElementSet:
    """x^H = {h^-1 x h : h in H}."""
    hs = H.indices()
    return ElementSet.from_indices(G.order, np.unique(G.mul[G.mul[G.inv[hs], x], hs]))


def commutator_set(G: GroupTable, x: int, H: ElementSet) -> ElementSet:
    """[x, H] = {x^-1 h^-1 x h : h in H}."""
    hs = H.indices()
    conjugates = G.mul[G.mul[G.inv[hs], x], hs]
    return ElementSet.from_indices(G.order, np.unique(G.mul[G.inv[x], conjugates]))


def left_commutator_set(G: GroupTable, A: ElementSet, x: int) -> ElementSet:
    """[A, x] = {a^-1 x^-1 a x : a in A}."""
    a = A.indices()
    values = G.mul[G.mul[G.inv[a], G.inv[x]], G.mul[a, x]]
    return ElementSet.from_indices(G.order, np.unique(values))


def coset_identity(G: GroupTable, x: int, H: ElementSet) -> bool:
    """x^H == x[x, H] as sets."""
    translated = G.mul[x, commutator_set(G, x, H).indices()]
    return ElementSet.from_indices(G.order, translated) == h_class(G, x, H)


def is_degenerate(G: GroupTable) -> bool:
    """True when G has a single class size (G abelian)."""
    return len(conjugacy_classes(G).distinct_sizes()) == 1


def small_elements(G: GroupTable) -> ElementSet:
    """Union of the classes whose size is one of the two smallest distinct sizes.

    With a single distinct size (G abelian) every element is small.
    """
    def compute() -> ElementSet:
        partition = conjugacy_classes(G)
        chosen = set(partition.distinct_sizes()[:2])
        bits = 0
        for members, size in zip(partition.classes, partition.sizes):
            if size in chosen:
                bits |= members.bits
        return ElementSet(G.order, bits)
    return G.memoized("small", compute)


def m_subgroup(G: GroupTable) -> Subgroup:
    """M(G): the subgroup generated by the small elements."""
    return G.memoized("m_subgroup", lambda: subgroup_generated(G, small_elements(G)))
