"""Fitting subgroup: element-wise characterization and enumeration oracle."""
from typing import Dict, Optional

from app.config import Settings
from app.domain.element_set import ElementSet, Subgroup
from app.domain.errors import OracleInconsistency
from app.domain.group_table import GroupTable
from app.groups.subgroups import join, normal_closure, subgroup_generated
from app.structure.classes import conjugacy_classes
from app.structure.normal_subgroups import enumerate_normal_subgroups
from app.structure.series import is_nilpotent


def fitting_subgroup(G: GroupTable) -> Subgroup:
    """F(G): generated by the elements whose normal closure is nilpotent.

    The normal closure only depends on the class, so one representative per
    class is tested.
    """
    def compute() -> Subgroup:
        partition = conjugacy_classes(G)
        verdicts: Dict[int, bool] = {}
        bits = 0
        for members, rep in zip(partition.classes, partition.representatives):
            closure = normal_closure(G, ElementSet.from_indices(G.order, [rep]))
            if closure.bits not in verdicts:
                verdicts[closure.bits] = is_nilpotent(G, closure)
            if verdicts[closure.bits]:
                bits |= members.bits
        return subgroup_generated(G, ElementSet(G.order, bits))
    return G.memoized("fitting", compute)


def fitting_oracle(G: GroupTable, settings: Optional[Settings] = None) -> Subgroup:
    """Largest nilpotent normal subgroup, found by enumerating normal subgroups.

    Raises:
        OracleCapExceeded: too many classes to enumerate
        OracleInconsistency: two nilpotent normal subgroups generate a
            subgroup not inside the largest one
    """
    nilpotent = [N for N in enumerate_normal_subgroups(G, settings) if is_nilpotent(G, N)]
    largest = max(nilpotent, key=lambda s: s.sort_key())
    # the product of two members lies in `largest` iff both members do
    for N in nilpotent:
        if not N.issubset(largest):
            product = join(G, N, largest)
            raise OracleInconsistency(
                f"{G.name}: nilpotent normal subgroup of order {len(N)} is not inside the "
                f"largest one ({len(largest)}); their product has order {len(product)}")
    return largest
