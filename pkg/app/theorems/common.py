"""Helpers shared by the checkers."""
from typing import List

from app.domain.element_set import ElementSet
from app.domain.group_table import GroupTable
from app.groups.subgroups import is_normal_subset
from app.structure.classes import commutator_set, small_elements

MAX_LISTED = 16


def describe(G: GroupTable, H: ElementSet, role: str) -> str:
    """Short human-readable subject, e.g. 'K order 4 {e, (0 1)(2 3), ...}'."""
    members = [G.label(x) for x in H.to_list()[:MAX_LISTED]]
    if len(H) > MAX_LISTED:
        members.append("...")
    return f"{role} order {len(H)} {{{', '.join(members)}}}"


def non_normal_commutator_sets(G: GroupTable, K: ElementSet) -> List[int]:
    """Small x for which [x, K] is not a normal subset of K."""
    return [int(x) for x in small_elements(G).indices()
            if not is_normal_subset(G, commutator_set(G, int(x), K), K)]


def listed(G: GroupTable, elements) -> List[str]:
    return [G.label(int(x)) for x in list(elements)[:MAX_LISTED]]
