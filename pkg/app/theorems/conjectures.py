"""Scanners for the two open conjectures and the proved equivalence between them.

A conjecture counterexample is a result, not an error: the report carries
the full Cayley table so it can be reproduced.
"""
from typing import List, Tuple
import logging

from app.domain.group_table import GroupTable
from app.domain.report import Statement, TheoremReport, Verdict
from app.groups.subgroups import center, group_center
from app.structure.classes import conjugacy_classes, is_degenerate, m_subgroup, small_elements
from app.structure.fitting import fitting_subgroup
from app.structure.series import is_solvable
from app.theorems.common import listed, non_normal_commutator_sets

logger = logging.getLogger(__name__)


def _hypotheses(G: GroupTable) -> List[Tuple[str, bool]]:
    return [
        ("G solvable", is_solvable(G)),
        ("Z(G) = 1", group_center(G).is_trivial()),
    ]


def _base_witness(G: GroupTable) -> dict:
    return {
        "f_order": len(fitting_subgroup(G)),
        "m_order": len(m_subgroup(G)),
        "small_count": len(small_elements(G)),
    }


def _with_group_dump(G: GroupTable, report: TheoremReport) -> TheoremReport:
    if report.verdict == Verdict.COUNTEREXAMPLE:
        logger.warning(f"{report.statement.value}: counterexample found in {G.name} (order {G.order})")
        report.witness["class_sizes"] = list(conjugacy_classes(G).sizes)
        report.witness["group"] = G.to_dict()
    return report


def check_conjecture_1(G: GroupTable) -> TheoremReport:
    """G solvable with Z(G) = 1  =>  every small element lies in Z(F(G))."""
    def conclude():
        z_f = center(G, fitting_subgroup(G))
        outside = small_elements(G) - z_f
        return not outside, {"center_f_order": len(z_f), "small_outside_center_f": listed(G, outside)}

    report = TheoremReport.evaluate(G.name, Statement.CONJECTURE_1, _hypotheses(G), conclude,
                                    witness=_base_witness(G), degenerate=is_degenerate(G))
    return _with_group_dump(G, report)


def check_conjecture_1prime(G: GroupTable) -> TheoremReport:
    """G solvable with Z(G) = 1  =>  [x, F(G)] is a normal subset of F(G) for every small x."""
    def conclude():
        offending = non_normal_commutator_sets(G, fitting_subgroup(G))
        return not offending, {"non_normal_small_elements": listed(G, offending)}

    report = TheoremReport.evaluate(G.name, Statement.CONJECTURE_1PRIME, _hypotheses(G), conclude,
                                    witness=_base_witness(G), degenerate=is_degenerate(G))
    return _with_group_dump(G, report)


def check_equivalence(G: GroupTable) -> TheoremReport:
    """For solvable centerless G: M(G) <= Z(F(G)) iff [x, F(G)] is normal in F(G) for all small x."""
    hypotheses = _hypotheses(G)
    if not all(value for _, value in hypotheses):
        return TheoremReport.not_applicable(G.name, Statement.PROP_EQUIVALENCE, hypotheses,
                                            degenerate=is_degenerate(G))

    def conclude():
        F = fitting_subgroup(G)
        m_in_center = m_subgroup(G).issubset(center(G, F))
        normal_subsets = not non_normal_commutator_sets(G, F)
        return m_in_center == normal_subsets, {
            "m_in_center_of_f": m_in_center,
            "commutator_sets_normal": normal_subsets,
        }

    return TheoremReport.evaluate(G.name, Statement.PROP_EQUIVALENCE, hypotheses, conclude,
                                  witness=_base_witness(G), degenerate=is_degenerate(G))
