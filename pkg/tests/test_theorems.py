"""Tests for the theorem checkers, the conjecture scanners and flatness."""
import unittest

from app.catalog.builtin import builtin_catalog
from app.catalog.families import (
    make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_heisenberg, make_symmetric,
)
from app.catalog.spec_parser import parse_group_spec
from app.config import Settings
from app.domain.report import Statement, TheoremReport, Verdict
from app.structure.fitting import fitting_subgroup
from app.structure.normal_subgroups import candidate_normal_subgroups, enumerate_normal_subgroups
from app.structure.series import is_solvable
from app.groups.subgroups import group_center
from app.theorems.conjectures import check_conjecture_1, check_conjecture_1prime, check_equivalence
from app.theorems.flatness import (
    check_class_two_flat, check_prop_flat, conjugate_rank_one, is_flat,
)
from app.theorems.statements import (
    check_corollary_B, check_lemma_centralizer, check_prop_commutator_central, check_theorem_A,
    check_theorem_C, find_theorem_A_witnesses,
)

PROVED_VERDICTS = (Verdict.VERIFIED, Verdict.HYPOTHESIS_NOT_MET, Verdict.NOT_APPLICABLE)


def element(G, label):
    return G.labels.index(label)


def v4_of(G):
    return G.element_set([0] + [element(G, c) for c in ("(0 1)(2 3)", "(0 2)(1 3)", "(0 3)(1 2)")])


class TestTheoremReport(unittest.TestCase):
    """Test verdict/field consistency."""

    def test_verified_needs_true_conclusion(self):
        with self.assertRaises(ValueError):
            TheoremReport("G", Statement.THEOREM_C, [("h", True)], False, Verdict.VERIFIED)

    def test_counterexample_needs_hypotheses(self):
        with self.assertRaises(ValueError):
            TheoremReport("G", Statement.THEOREM_C, [("h", False)], False, Verdict.COUNTEREXAMPLE)

    def test_no_conclusion_when_hypothesis_fails(self):
        with self.assertRaises(ValueError):
            TheoremReport("G", Statement.THEOREM_C, [("h", False)], True, Verdict.HYPOTHESIS_NOT_MET)

    def test_dict_round_trip(self):
        report = check_theorem_C(make_symmetric(4))
        self.assertEqual(TheoremReport.from_dict(report.to_dict()), report)

    def test_statement_parse(self):
        self.assertEqual(Statement.parse("theorem_A"), Statement.THEOREM_A)
        self.assertFalse(Statement.CONJECTURE_1.proved)
        with self.assertRaises(ValueError):
            Statement.parse("theorem_Z")


class TestLemmaAndProposition(unittest.TestCase):
    """Test the centralizer lemma and [M(G), K] <= Z(G)."""

    def test_lemma_on_d4_rotations(self):
        D = make_dihedral(4)
        report = check_lemma_centralizer(D, D.element_set([0, 1, 2, 3]))
        self.assertEqual(report.verdict, Verdict.VERIFIED)
        self.assertGreater(report.witness["instances"], 0)

    def test_lemma_abelian_vacuous(self):
        C = make_cyclic(6)
        report = check_lemma_centralizer(C, C.all_elements())
        self.assertEqual(report.verdict, Verdict.VERIFIED)
        self.assertEqual(report.witness["instances"], 0)

    def test_lemma_not_normal(self):
        S = make_symmetric(4)
        report = check_lemma_centralizer(S, S.element_set([0, element(S, "(0 1)")]))
        self.assertEqual(report.verdict, Verdict.NOT_APPLICABLE)

    def test_prop_examples(self):
        S4 = make_symmetric(4)
        self.assertEqual(check_prop_commutator_central(S4, S4.trivial_subgroup()).verdict, Verdict.VERIFIED)
        report = check_prop_commutator_central(S4, v4_of(S4))
        self.assertEqual(report.verdict, Verdict.VERIFIED)
        self.assertTrue(report.witness["elementwise_central"])
        S3 = make_symmetric(3)
        self.assertEqual(check_prop_commutator_central(S3, fitting_subgroup(S3)).verdict, Verdict.VERIFIED)

    def test_exhaustive_over_catalog(self):
        for G in builtin_catalog(64):
            if group_center(G) == G.all_elements():
                subgroups, _ = candidate_normal_subgroups(G, Settings())
            else:
                subgroups = enumerate_normal_subgroups(G, Settings(oracle_cap=64))
            for K in subgroups:
                for report in (check_lemma_centralizer(G, K), check_prop_commutator_central(G, K)):
                    self.assertIn(report.verdict, PROVED_VERDICTS,
                                  f"{report.statement.value} fails on {G.name}, {report.subject}")


class TestTheoremAAndCorollaryB(unittest.TestCase):
    """Test Theorem A, its witness search and Corollary B."""

    def test_s4_v4(self):
        S4 = make_symmetric(4)
        report = check_theorem_A(S4, v4_of(S4))
        self.assertEqual(report.verdict, Verdict.VERIFIED)
        self.assertTrue(report.witness["abelian_self_centralizing"])
        self.assertEqual(check_corollary_B(S4, v4_of(S4)).verdict, Verdict.VERIFIED)

    def test_d4_whole_group(self):
        D = make_dihedral(4)
        report = check_theorem_A(D, D.all_elements())
        self.assertEqual(report.verdict, Verdict.VERIFIED)
        self.assertEqual(report.witness["m_class"], 2)

    def test_non_normal_a(self):
        S4 = make_symmetric(4)
        report = check_theorem_A(S4, S4.element_set([0, element(S4, "(0 1)")]))
        self.assertEqual(report.verdict, Verdict.HYPOTHESIS_NOT_MET)
        self.assertIsNone(report.conclusion)

    def test_witnesses(self):
        trivial = make_cyclic(1)
        witnesses = find_theorem_A_witnesses(trivial)
        self.assertEqual(len(witnesses), 1)
        self.assertEqual(witnesses[0][1].verdict, Verdict.VERIFIED)

        S4 = make_symmetric(4)
        found = {len(A): report.verdict for A, report in find_theorem_A_witnesses(S4)}
        self.assertEqual(sorted(found), [4, 12, 24])
        self.assertEqual(found[4], Verdict.VERIFIED)

        S3 = make_symmetric(3)
        found = {len(A): report.verdict for A, report in find_theorem_A_witnesses(S3)}
        self.assertEqual(found[3], Verdict.VERIFIED)

    def test_exhaustive_over_small_catalog(self):
        settings = Settings(oracle_cap=64)
        for G in builtin_catalog(32) + [make_symmetric(4), make_alternating(5)]:
            for A in enumerate_normal_subgroups(G, settings):
                a_report = check_theorem_A(G, A)
                b_report = check_corollary_B(G, A)
                self.assertIn(a_report.verdict, PROVED_VERDICTS, f"Theorem A fails on {G.name}")
                self.assertIn(b_report.verdict, PROVED_VERDICTS, f"Corollary B fails on {G.name}")
                if b_report.verdict == Verdict.VERIFIED:
                    self.assertEqual(a_report.verdict, Verdict.VERIFIED,
                                     f"Corollary B hypothesis without Theorem A hypothesis on {G.name}")
                if a_report.witness["abelian_self_centralizing"]:
                    self.assertNotEqual(b_report.verdict, Verdict.HYPOTHESIS_NOT_MET,
                                        f"Abelian self-centralizing A fails Corollary B on {G.name}")


class TestTheoremC(unittest.TestCase):
    """Test Theorem C."""

    def test_examples(self):
        for G in (make_dihedral(4), make_symmetric(4), make_cyclic(2)):
            report = check_theorem_C(G)
            self.assertEqual(report.verdict, Verdict.VERIFIED, f"Theorem C on {G.name}")
            self.assertTrue(report.witness["m_in_second_center_of_f"])

    def test_catalog(self):
        for G in builtin_catalog(64):
            self.assertIn(check_theorem_C(G).verdict, PROVED_VERDICTS, f"Theorem C fails on {G.name}")


class TestConjectures(unittest.TestCase):
    """Test the conjecture scanners and the equivalence."""

    def test_examples(self):
        for G in (make_symmetric(3), make_symmetric(4), make_alternating(4)):
            self.assertEqual(check_conjecture_1(G).verdict, Verdict.VERIFIED, G.name)
            self.assertEqual(check_conjecture_1prime(G).verdict, Verdict.VERIFIED, G.name)
            equivalence = check_equivalence(G)
            self.assertEqual(equivalence.verdict, Verdict.VERIFIED, G.name)
            self.assertTrue(equivalence.witness["m_in_center_of_f"])

    def test_center_blocks_hypothesis(self):
        self.assertEqual(check_conjecture_1(make_dihedral(4)).verdict, Verdict.HYPOTHESIS_NOT_MET)
        self.assertEqual(check_conjecture_1prime(make_dicyclic(2)).verdict, Verdict.HYPOTHESIS_NOT_MET)
        self.assertEqual(check_equivalence(make_dihedral(4)).verdict, Verdict.NOT_APPLICABLE)

    def test_scanners_agree(self):
        extra = ["product:sym:3,sym:3", "product:affine:5,sym:3", "product:sym:3,alt:4"]
        groups = builtin_catalog(100) + [parse_group_spec(s).build() for s in extra]
        centerless = 0
        for G in groups:
            first = check_conjecture_1(G)
            second = check_conjecture_1prime(G)
            self.assertEqual(first.verdict, second.verdict, f"Scanners disagree on {G.name}")
            self.assertIn(check_equivalence(G).verdict, PROVED_VERDICTS, f"Equivalence fails on {G.name}")
            if is_solvable(G) and group_center(G).is_trivial():
                centerless += 1
                self.assertEqual(first.verdict, Verdict.VERIFIED, f"Conjecture 1 on {G.name}")
        self.assertGreater(centerless, 5)


class TestFlatness(unittest.TestCase):
    """Test flatness, conjugate rank one and the two flat statements."""

    def test_flat_and_rank(self):
        C = make_cyclic(5)
        self.assertTrue(is_flat(C))
        self.assertTrue(conjugate_rank_one(C))
        D = make_dihedral(4)
        self.assertTrue(is_flat(D))
        self.assertTrue(conjugate_rank_one(D))
        self.assertFalse(conjugate_rank_one(make_symmetric(4)))

    def test_prop_flat(self):
        for G in (make_dihedral(4), make_dicyclic(2), make_heisenberg(3)):
            report = check_prop_flat(G)
            self.assertEqual(report.verdict, Verdict.VERIFIED, f"flat proposition on {G.name}")
            self.assertTrue(report.witness["flat"])
        self.assertEqual(check_prop_flat(make_cyclic(4)).verdict, Verdict.NOT_APPLICABLE)
        self.assertEqual(check_prop_flat(make_symmetric(3)).verdict, Verdict.NOT_APPLICABLE)
        self.assertEqual(check_prop_flat(make_cyclic(1)).verdict, Verdict.NOT_APPLICABLE)

    def test_class_two_flat(self):
        self.assertEqual(check_class_two_flat(make_dicyclic(2)).verdict, Verdict.VERIFIED)
        self.assertEqual(check_class_two_flat(make_symmetric(3)).verdict, Verdict.NOT_APPLICABLE)
        for G in builtin_catalog(64):
            self.assertIn(check_class_two_flat(G).verdict, PROVED_VERDICTS, G.name)
            self.assertIn(check_prop_flat(G).verdict, PROVED_VERDICTS, G.name)


if __name__ == '__main__':
    unittest.main()
