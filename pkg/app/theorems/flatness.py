"""Flat groups and conjugate rank one."""
from sympy import factorint

from app.domain.group_table import GroupTable
from app.domain.report import Statement, TheoremReport
from app.groups.subgroups import is_subgroup
from app.structure.classes import commutator_set, conjugacy_classes, is_degenerate
from app.structure.series import group_nilpotency_class


def is_flat(G: GroupTable) -> bool:
    """[x, G] is a subgroup for every x.

    [x^g, G] is a conjugate of [x, G], so one element per class suffices.
    """
    whole = G.all_elements()
    return all(is_subgroup(G, commutator_set(G, rep, whole))
               for rep in conjugacy_classes(G).representatives)


def non_central_class_sizes(G: GroupTable) -> list:
    return sorted({size for size in conjugacy_classes(G).sizes if size > 1})


def conjugate_rank_one(G: GroupTable) -> bool:
    """All non-central elements share one class size (vacuously true for abelian G)."""
    return len(non_central_class_sizes(G)) <= 1


def prime_power_base(n: int):
    """p if n = p^k with k >= 1, else None."""
    factors = factorint(n)
    if len(factors) != 1:
        return None
    return int(next(iter(factors)))


def check_prop_flat(G: GroupTable) -> TheoremReport:
    """For a p-group of conjugate rank 1: flat iff nilpotency class 2."""
    p = prime_power_base(G.order)
    hypotheses = [
        ("|G| a prime power", p is not None),
        ("conjugate rank 1", conjugate_rank_one(G)),
        ("G has a non-central element", bool(non_central_class_sizes(G))),
    ]
    witness = {"prime": p, "non_central_class_sizes": non_central_class_sizes(G)}
    if not all(value for _, value in hypotheses):
        return TheoremReport.not_applicable(G.name, Statement.PROP_FLAT, hypotheses, witness,
                                            degenerate=is_degenerate(G))

    def conclude():
        flat = is_flat(G)
        nil_class = group_nilpotency_class(G)
        return flat == (nil_class == 2), {"flat": flat, "nilpotency_class": nil_class}

    return TheoremReport.evaluate(G.name, Statement.PROP_FLAT, hypotheses, conclude,
                                  witness=witness, degenerate=is_degenerate(G))


def check_class_two_flat(G: GroupTable) -> TheoremReport:
    """Every group of nilpotency class 2 is flat."""
    nil_class = group_nilpotency_class(G)
    hypotheses = [("nilpotency class 2", nil_class == 2)]
    if nil_class != 2:
        return TheoremReport.not_applicable(G.name, Statement.CLASS_TWO_FLAT, hypotheses,
                                            {"nilpotency_class": nil_class},
                                            degenerate=is_degenerate(G))
    return TheoremReport.evaluate(G.name, Statement.CLASS_TWO_FLAT, hypotheses,
                                  lambda: (is_flat(G), {}),
                                  witness={"nilpotency_class": nil_class},
                                  degenerate=is_degenerate(G))
