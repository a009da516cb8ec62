"""Normal subgroup enumeration by join-closure of class closures."""
from typing import Dict, List, Optional, Tuple
import logging

from app.config import Settings
from app.domain.element_set import Subgroup
from app.domain.errors import OracleCapExceeded
from app.domain.group_table import GroupTable
from app.groups.subgroups import group_center, join, normal_closure
from app.structure.classes import conjugacy_classes, m_subgroup

logger = logging.getLogger(__name__)


def class_closures(G: GroupTable) -> List[Subgroup]:
    """Distinct normal closures of the conjugacy classes, sorted."""
    def compute() -> List[Subgroup]:
        partition = conjugacy_classes(G)
        found: Dict[int, Subgroup] = {}
        for members in partition.classes:
            closure = normal_closure(G, members)
            found.setdefault(closure.bits, closure)
        return sorted(found.values(), key=lambda s: s.sort_key())
    return G.memoized("class_closures", compute)


def enumerate_normal_subgroups(G: GroupTable, settings: Optional[Settings] = None) -> List[Subgroup]:
    """All normal subgroups of G, sorted by (order, member bitset).

    Every normal subgroup is the join of the class closures it contains,
    so closing the class closures under joins visits exactly the normal
    subgroups.

    Raises:
        OracleCapExceeded: G has more conjugacy classes than settings.oracle_cap
    """
    settings = settings or Settings()
    partition = conjugacy_classes(G)
    if len(partition) > settings.oracle_cap:
        raise OracleCapExceeded(settings.oracle_cap, len(partition))

    def compute() -> List[Subgroup]:
        base = class_closures(G)
        found: Dict[int, Subgroup] = {1: G.trivial_subgroup()}
        for closure in base:
            found.setdefault(closure.bits, closure)
        worklist = list(found.values())
        while worklist:
            current = worklist.pop()
            for closure in base:
                if closure.issubset(current):
                    continue
                joined = join(G, current, closure)
                if joined.bits not in found:
                    found[joined.bits] = joined
                    worklist.append(joined)
        return sorted(found.values(), key=lambda s: s.sort_key())
    return G.memoized("normal_subgroups", compute)


def known_normal_subgroups(G: GroupTable) -> List[Subgroup]:
    """Normal subgroups available without enumeration.

    Trivial group, G, Z(G), Z_2(G), lower central and derived series terms,
    M(G), F(G) and Z(F(G)); all characteristic, hence normal.
    """
    from app.structure.fitting import fitting_subgroup
    from app.structure.series import (
        derived_series_and_solvability, lower_central_series, second_center,
    )
    from app.groups.subgroups import center

    whole = G.all_elements()
    fitting = fitting_subgroup(G)
    candidates = [G.trivial_subgroup(), whole, group_center(G), second_center(G, whole)]
    candidates.extend(lower_central_series(G, whole).terms)
    candidates.extend(derived_series_and_solvability(G, whole)[0].terms)
    candidates.extend([m_subgroup(G), fitting, center(G, fitting)])
    unique = {s.bits: s for s in candidates}
    return sorted(unique.values(), key=lambda s: s.sort_key())


def candidate_normal_subgroups(G: GroupTable, settings: Optional[Settings] = None) -> Tuple[List[Subgroup], bool]:
    """All normal subgroups when within the oracle cap, else the known ones.

    Returns:
        (subgroups, exhaustive)
    """
    try:
        return enumerate_normal_subgroups(G, settings), True
    except OracleCapExceeded as e:
        logger.info(f"{G.name}: {e}; using characteristic subgroups only")
        return known_normal_subgroups(G), False
