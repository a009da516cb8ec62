"""Cross-check table invariants against sympy's permutation groups."""
import unittest

from sympy.combinatorics import Permutation, PermutationGroup

from app.domain.perm import Perm
from app.groups.subgroups import group_center
from app.groups.table_builder import build_from_generators
from app.structure.classes import conjugacy_classes
from app.structure.series import commutator_subgroup, group_nilpotency_class, is_solvable

CASES = {
    "S3": [[1, 0, 2], [1, 2, 0]],
    "S4": [[1, 0, 2, 3], [1, 2, 3, 0]],
    "D4": [[1, 2, 3, 0], [3, 2, 1, 0]],
    "A4": [[1, 2, 0, 3], [0, 2, 3, 1]],
    "A5": [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]],
    "C2xC2xC2": [[1, 0, 2, 3, 4, 5], [0, 1, 3, 2, 4, 5], [0, 1, 2, 3, 5, 4]],
    "Q8": [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]],
    "AGL1_5": [[1, 2, 3, 4, 0], [0, 2, 4, 1, 3]],
}


class TestSympyOracle(unittest.TestCase):
    """Invariants of build_from_generators agree with sympy."""

    def check(self, name, images):
        G = build_from_generators([Perm(tuple(i)) for i in images], name)
        P = PermutationGroup([Permutation(i) for i in images])
        whole = G.all_elements()

        self.assertEqual(G.order, P.order(), f"{name}: order")
        self.assertEqual(is_solvable(G), P.is_solvable, f"{name}: solvable")
        self.assertEqual(group_nilpotency_class(G) is not None, P.is_nilpotent, f"{name}: nilpotent")
        self.assertEqual(group_center(G).order, P.center().order(), f"{name}: center")
        self.assertEqual(commutator_subgroup(G, whole, whole).order, P.derived_subgroup().order(),
                         f"{name}: derived subgroup")
        self.assertEqual(sorted(conjugacy_classes(G).sizes),
                         sorted(len(c) for c in P.conjugacy_classes()), f"{name}: class sizes")

    def test_cases(self):
        for name, images in CASES.items():
            with self.subTest(group=name):
                self.check(name, images)


if __name__ == '__main__':
    unittest.main()
