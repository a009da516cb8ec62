"""Scan orchestrator: runs checkers over many groups and aggregates a ScanReport."""
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence
import logging

from app import __version__
from app.config import Settings
from app.domain.errors import OracleCapExceeded
from app.domain.group_table import GroupTable
from app.domain.report import Statement, TheoremReport, Verdict
from app.domain.scan_report import GroupScanResult, ScanReport
from app.groups.subgroups import group_center
from app.structure.classes import conjugacy_classes, m_subgroup
from app.structure.fitting import fitting_subgroup
from app.structure.normal_subgroups import candidate_normal_subgroups
from app.structure.series import is_solvable
from app.theorems.conjectures import check_conjecture_1, check_conjecture_1prime, check_equivalence
from app.theorems.flatness import check_class_two_flat, check_prop_flat
from app.theorems.statements import (
    check_corollary_B, check_lemma_centralizer, check_prop_commutator_central, check_theorem_A,
    check_theorem_C, find_theorem_A_witnesses, m_class_of,
)

logger = logging.getLogger(__name__)

_WHOLE_GROUP_CHECKERS = {
    Statement.THEOREM_C: check_theorem_C,
    Statement.CONJECTURE_1: check_conjecture_1,
    Statement.CONJECTURE_1PRIME: check_conjecture_1prime,
    Statement.PROP_EQUIVALENCE: check_equivalence,
    Statement.PROP_FLAT: check_prop_flat,
    Statement.CLASS_TWO_FLAT: check_class_two_flat,
}

_PER_K_CHECKERS = {
    Statement.LEMMA_CENTRALIZER: check_lemma_centralizer,
    Statement.PROP_COMMUTATOR_CENTRAL: check_prop_commutator_central,
}


def group_summary(G: GroupTable) -> GroupScanResult:
    """The `info` invariants of G, without any checker reports."""
    m_class = m_class_of(G)
    return GroupScanResult(
        name=G.name,
        order=G.order,
        class_sizes=list(conjugacy_classes(G).sizes),
        center_order=len(group_center(G)),
        m_order=len(m_subgroup(G)),
        m_class=m_class if m_class is not None else "not nilpotent",
        fitting_order=len(fitting_subgroup(G)),
        solvable=is_solvable(G),
    )


def _default_a_subject(G: GroupTable) -> str:
    return f"A = F(G) order {len(fitting_subgroup(G))}"


def run_statement(G: GroupTable, statement: Statement, settings: Optional[Settings] = None,
                  witness_search: bool = False) -> List[TheoremReport]:
    """Run one checker on G.

    Per-subgroup statements give one report per candidate subgroup. Theorem A
    and Corollary B use A = F(G) unless witness search is on and the group is
    within the oracle cap, in which case every normal A with C_G(A) <= A is checked.
    """
    settings = settings or Settings()
    if statement in _WHOLE_GROUP_CHECKERS:
        return [_WHOLE_GROUP_CHECKERS[statement](G)]

    if statement in _PER_K_CHECKERS:
        candidates, exhaustive = candidate_normal_subgroups(G, settings)
        if not exhaustive:
            logger.info(f"{G.name}: {statement.value} over characteristic subgroups only")
        checker = _PER_K_CHECKERS[statement]
        return [checker(G, K) for K in candidates]

    if witness_search:
        try:
            witnesses = find_theorem_A_witnesses(G, settings)
        except OracleCapExceeded as e:
            logger.info(f"{G.name}: witness search skipped ({e}), using A = F(G)")
        else:
            if statement == Statement.THEOREM_A:
                return [report for _, report in witnesses]
            return [check_corollary_B(G, A) for A, _ in witnesses]

    checker = check_theorem_A if statement == Statement.THEOREM_A else check_corollary_B
    return [checker(G, fitting_subgroup(G), subject=_default_a_subject(G))]


def scan_group(G: GroupTable, statements: Sequence[Statement],
               settings: Optional[Settings] = None) -> GroupScanResult:
    """Summary plus reports for one group; failures land in `errors`."""
    settings = settings or Settings()
    try:
        result = group_summary(G)
    except Exception as e:
        logger.exception(f"{G.name}: invariants failed")
        return GroupScanResult(name=G.name, order=G.order, errors=[f"invariants: {e}"])

    for statement in statements:
        try:
            reports = run_statement(G, statement, settings, witness_search=True)
        except Exception as e:
            logger.exception(f"{G.name}: {statement.value} failed")
            result.errors.append(f"{statement.value}: {e}")
            continue
        for report in reports:
            if report.verdict == Verdict.COUNTEREXAMPLE and statement.proved:
                logger.error(f"{G.name}: proved statement {statement.value} returned a counterexample "
                             f"({report.subject or 'whole group'})")
        result.reports.extend(reports)
    return result


def _scan_task(args) -> GroupScanResult:
    G, statements, settings = args
    return scan_group(G, statements, settings)


def scan(groups: Iterable[GroupTable], statements: Sequence[Statement],
         settings: Optional[Settings] = None) -> ScanReport:
    """Run the statements over the groups and aggregate.

    Groups fan out over `settings.jobs` worker processes; the report is
    ordered by (order, name) so the output does not depend on the worker count.

    Raises:
        ValueError: empty statement set
    """
    settings = settings or Settings()
    statements = list(dict.fromkeys(statements))
    if not statements:
        raise ValueError("At least one statement is required")
    groups = sorted(groups, key=lambda G: (G.order, G.name))
    logger.info(f"Scanning {len(groups)} groups for {len(statements)} statements with {settings.jobs} jobs")

    tasks = [(G, statements, settings) for G in groups]
    if settings.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=settings.jobs) as executor:
            results = list(executor.map(_scan_task, tasks))
    else:
        results = [_scan_task(task) for task in tasks]

    report = ScanReport(tool_version=__version__, config=settings.to_dict(),
                        statements=statements, groups=results)
    logger.info(f"Scan finished: {len(report.counterexamples())} counterexamples")
    return report
