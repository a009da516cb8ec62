"""Checkers for the centralizer lemma, [M(G), K] <= Z(G), Theorems A and C, Corollary B."""
from typing import List, Optional, Tuple
import logging

import numpy as np

from app.config import Settings
from app.domain.element_set import ElementSet, Subgroup
from app.domain.group_table import GroupTable
from app.domain.report import Statement, TheoremReport
from app.groups.subgroups import (
    center, centralizer, group_center, is_normal_subgroup, is_normal_subset, is_subgroup,
)
from app.structure.classes import (
    commutator_set, conjugacy_classes, is_degenerate, left_commutator_set, m_subgroup,
    small_elements,
)
from app.structure.fitting import fitting_subgroup
from app.structure.normal_subgroups import enumerate_normal_subgroups
from app.structure.series import commutator_subgroup, nilpotency_class, second_center
from app.theorems.common import describe, listed, non_normal_commutator_sets

logger = logging.getLogger(__name__)


def _centralizer_orders(G: GroupTable) -> np.ndarray:
    """|C_G(x)| for every x, from the class sizes."""
    partition = conjugacy_classes(G)
    sizes = np.asarray(partition.sizes, dtype=np.int64)[partition.class_index]
    return G.order // sizes


def m_class_of(G: GroupTable) -> Optional[int]:
    """Nilpotency class of M(G), None when M(G) is not nilpotent (memoized)."""
    return G.memoized("m_class", lambda: nilpotency_class(G, m_subgroup(G)))


def check_lemma_centralizer(G: GroupTable, K: ElementSet) -> TheoremReport:
    """For x outside Z(G) with [x, K] normal in K: |C_G(y)| > |C_G(x)| for all y in [x, K].

    Args:
        G: Group
        K: Candidate normal subgroup

    Returns:
        NOT_APPLICABLE when K is not normal; otherwise VERIFIED, or
        COUNTEREXAMPLE with the first failing (x, y) pair in the witness
    """
    subject = describe(G, K, "K")
    degenerate = is_degenerate(G)
    normal = is_normal_subgroup(G, K)
    hypotheses = [("K normal in G", normal)]
    if not normal:
        return TheoremReport.not_applicable(G.name, Statement.LEMMA_CENTRALIZER, hypotheses,
                                            subject=subject, degenerate=degenerate)

    def conclude():
        orders = _centralizer_orders(G)
        non_central = (G.all_elements() - group_center(G)).indices()
        instances = 0
        for x in non_central:
            x = int(x)
            S = commutator_set(G, x, K)
            if not is_normal_subset(G, S, K):
                continue
            instances += 1
            ys = S.indices()
            # strict: equal centralizer orders are a failure
            failing = ys[orders[ys] <= orders[x]]
            if len(failing):
                y = int(failing[0])
                return False, {"instances": instances, "failure": {
                    "x": G.label(x), "y": G.label(y),
                    "centralizer_x": int(orders[x]), "centralizer_y": int(orders[y]),
                }}
        return True, {"instances": instances}

    return TheoremReport.evaluate(G.name, Statement.LEMMA_CENTRALIZER, hypotheses, conclude,
                                  witness={"k_order": len(K)}, subject=subject, degenerate=degenerate)


def check_prop_commutator_central(G: GroupTable, K: ElementSet) -> TheoremReport:
    """If [x, K] is a normal subset of K for every small x, then [M(G), K] <= Z(G).

    The element-wise form [x, K] <= Z(G) for small x is checked as well and
    both results go into the witness.

    Args:
        G: Group
        K: Candidate normal subgroup

    Returns:
        TheoremReport for (G, K)
    """
    subject = describe(G, K, "K")
    degenerate = is_degenerate(G)
    normal = is_normal_subgroup(G, K)
    if not normal:
        return TheoremReport.not_applicable(G.name, Statement.PROP_COMMUTATOR_CENTRAL,
                                            [("K normal in G", False)],
                                            subject=subject, degenerate=degenerate)
    offending = non_normal_commutator_sets(G, K)
    hypotheses = [
        ("K normal in G", True),
        ("[x,K] normal subset of K for all small x", not offending),
    ]

    def conclude():
        Z = group_center(G)
        MK = commutator_subgroup(G, m_subgroup(G), K)
        subgroup_central = MK.issubset(Z)
        escaping = [int(x) for x in small_elements(G).indices()
                    if not commutator_set(G, int(x), K).issubset(Z)]
        return subgroup_central and not escaping, {
            "m_k_commutator_order": len(MK),
            "center_order": len(Z),
            "subgroup_central": subgroup_central,
            "elementwise_central": not escaping,
            "escaping_small_elements": listed(G, escaping),
        }

    witness = {"k_order": len(K), "m_order": len(m_subgroup(G))}
    if offending:
        witness["non_normal_small_elements"] = listed(G, offending)
    return TheoremReport.evaluate(G.name, Statement.PROP_COMMUTATOR_CENTRAL, hypotheses, conclude,
                                  witness=witness, subject=subject, degenerate=degenerate)


def _theorem_a_hypotheses(G: GroupTable, A: ElementSet) -> Tuple[bool, bool, List[int]]:
    """(A normal, C_G(A) <= A, small x with [A, x] not normal in A)."""
    normal = is_normal_subgroup(G, A)
    self_centralizing = centralizer(G, A, G.all_elements()).issubset(A)
    offending = [int(x) for x in small_elements(G).indices()
                 if not is_normal_subset(G, left_commutator_set(G, A, int(x)), A)]
    return normal, self_centralizing, offending


def _class_at_most(G: GroupTable, bound: int) -> Tuple[bool, dict]:
    m_class = m_class_of(G)
    holds = m_class is not None and m_class <= bound
    return holds, {"m_class": m_class if m_class is not None else "not nilpotent"}


def check_theorem_A(G: GroupTable, A: ElementSet, subject: Optional[str] = None) -> TheoremReport:
    """A normal, C_G(A) <= A, [A, x] normal in A for small x  =>  M(G) nilpotent of class <= 3.

    Args:
        G: Group
        A: Subgroup to test the hypotheses on
        subject: Report subject; defaults to a listing of A

    Returns:
        TheoremReport; the witness flags A abelian with C_G(A) = A
    """
    normal, self_centralizing, offending = _theorem_a_hypotheses(G, A)
    hypotheses = [
        ("A normal in G", normal),
        ("C_G(A) <= A", self_centralizing),
        ("[A,x] normal subset of A for all small x", not offending),
    ]
    abelian = is_subgroup(G, A) and center(G, A) == A
    witness = {
        "a_order": len(A),
        "m_order": len(m_subgroup(G)),
        "abelian_self_centralizing": bool(
            abelian and centralizer(G, A, G.all_elements()) == A),
    }
    if offending:
        witness["non_normal_small_elements"] = listed(G, offending)
    return TheoremReport.evaluate(G.name, Statement.THEOREM_A, hypotheses,
                                  lambda: _class_at_most(G, 3), witness=witness,
                                  subject=subject or describe(G, A, "A"),
                                  degenerate=is_degenerate(G))


def find_theorem_A_witnesses(G: GroupTable, settings: Optional[Settings] = None
                             ) -> List[Tuple[Subgroup, TheoremReport]]:
    """Theorem A reports for every normal A with C_G(A) <= A.

    Args:
        G: Group
        settings: Oracle cap for the normal subgroup enumeration

    Returns:
        (A, report) pairs in enumeration order

    Raises:
        OracleCapExceeded: too many classes to enumerate normal subgroups
    """
    whole = G.all_elements()
    results = []
    for A in enumerate_normal_subgroups(G, settings):
        if centralizer(G, A, whole).issubset(A):
            results.append((A, check_theorem_A(G, A)))
    return results


def check_corollary_B(G: GroupTable, A: ElementSet, subject: Optional[str] = None) -> TheoremReport:
    """As Theorem A with [A, x] <= Z(A) for small x.

    The conclusion also requires that Theorem A's normal-subset hypothesis
    holds, since [A, x] <= Z(A) implies it.

    Args:
        G: Group
        A: Subgroup to test the hypotheses on
        subject: Report subject; defaults to a listing of A

    Returns:
        TheoremReport for (G, A)
    """
    normal, self_centralizing, not_normal = _theorem_a_hypotheses(G, A)
    z_a = center(G, A)
    outside_center = [int(x) for x in small_elements(G).indices()
                      if not left_commutator_set(G, A, int(x)).issubset(z_a)]
    hypotheses = [
        ("A normal in G", normal),
        ("C_G(A) <= A", self_centralizing),
        ("[A,x] <= Z(A) for all small x", not outside_center),
    ]

    def conclude():
        implies = not not_normal
        class_ok, extra = _class_at_most(G, 3)
        extra.update({"implies_theorem_A_hypothesis": implies, "class_at_most_3": class_ok})
        return implies and class_ok, extra

    witness = {"a_order": len(A), "center_a_order": len(z_a), "m_order": len(m_subgroup(G))}
    return TheoremReport.evaluate(G.name, Statement.COROLLARY_B, hypotheses, conclude,
                                  witness=witness, subject=subject or describe(G, A, "A"),
                                  degenerate=is_degenerate(G))


def check_theorem_C(G: GroupTable) -> TheoremReport:
    """C_G(F) <= F and [x, F] normal in F for small x  =>  class(M(G)) <= 2 and M(G) <= Z_2(F)."""
    F = fitting_subgroup(G)
    self_centralizing = centralizer(G, F, G.all_elements()).issubset(F)
    offending = non_normal_commutator_sets(G, F)
    hypotheses = [
        ("C_G(F) <= F", self_centralizing),
        ("[x,F] normal subset of F for all small x", not offending),
    ]

    def conclude():
        class_ok, extra = _class_at_most(G, 2)
        z2 = second_center(G, F)
        in_second_center = m_subgroup(G).issubset(z2)
        extra.update({
            "class_at_most_2": class_ok,
            "m_in_second_center_of_f": in_second_center,
            "second_center_order": len(z2),
        })
        return class_ok and in_second_center, extra

    witness = {"f_order": len(F), "m_order": len(m_subgroup(G))}
    if offending:
        witness["non_normal_small_elements"] = listed(G, offending)
    return TheoremReport.evaluate(G.name, Statement.THEOREM_C, hypotheses, conclude,
                                  witness=witness, degenerate=is_degenerate(G))
