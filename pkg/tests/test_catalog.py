"""Tests for the group families, the spec parser and the built-in catalog."""
import json
import os
import tempfile
import unittest

from app.catalog.builtin import builtin_catalog, builtin_specs, spec_order
from app.catalog.families import (
    direct_product, make_affine, make_alternating, make_cyclic, make_dicyclic, make_dihedral,
    make_elementary_abelian, make_heisenberg, make_symmetric,
)
from app.catalog.spec_parser import GroupSpec, parse_group_spec
from app.config import Settings
from app.domain.errors import OrderCapExceeded, ParameterOutOfRange, ParseError, UnknownFamily
from app.groups.subgroups import group_center
from app.structure.classes import conjugacy_classes
from app.structure.series import is_solvable
from app.validation.cayley_checker import CayleyChecker


class TestFamilies(unittest.TestCase):
    """Test the family constructors."""

    def test_orders_and_names(self):
        cases = [
            (make_cyclic(1), 1, "C1"),
            (make_cyclic(12), 12, "C12"),
            (make_dihedral(4), 8, "D4"),
            (make_dicyclic(2), 8, "Dic2"),
            (make_symmetric(4), 24, "S4"),
            (make_alternating(5), 60, "A5"),
            (make_elementary_abelian(2, 3), 8, "E_8"),
            (make_heisenberg(3), 27, "H27"),
            (make_affine(5), 20, "AGL1_5"),
            (direct_product(make_symmetric(3), make_cyclic(2)), 12, "S3xC2"),
        ]
        for G, order, name in cases:
            self.assertEqual(G.order, order, f"{name} order")
            self.assertEqual(G.name, name)

    def test_every_constructor_passes_validation(self):
        checker = CayleyChecker()
        for G in builtin_catalog(60):
            mul, inv, _ = checker.normalize(G.mul)
            self.assertEqual(inv.tolist(), G.inv.tolist(), f"{G.name} inverses")

    def test_quaternion_classes(self):
        self.assertEqual(list(conjugacy_classes(make_dicyclic(2)).sizes), [1, 1, 2, 2, 2])

    def test_dihedral_and_dicyclic_sanity(self):
        for n in range(3, 13):
            D = make_dihedral(n)
            self.assertEqual(D.order, 2 * n)
            self.assertEqual(len(group_center(D)), 2 if n % 2 == 0 else 1, f"Z(D{n})")
            self.assertEqual(make_dicyclic(n).order, 4 * n)

    def test_heisenberg_exponent(self):
        H = make_heisenberg(5)
        x = 1
        for _ in range(3):
            x = H.product(x, 1)
        self.assertEqual(H.product(x, 1), 0, "Generators have order p")
        self.assertEqual(len(group_center(H)), 5)

    def test_affine_is_frobenius(self):
        G = make_affine(7)
        self.assertTrue(is_solvable(G))
        self.assertTrue(group_center(G).is_trivial())

    def test_parameter_bounds(self):
        with self.assertRaises(ParameterOutOfRange):
            make_cyclic(0)
        with self.assertRaises(ParameterOutOfRange):
            make_symmetric(8)
        with self.assertRaises(ParameterOutOfRange):
            make_elementary_abelian(4, 2)
        with self.assertRaises(ParameterOutOfRange):
            make_heisenberg(2)
        with self.assertRaises(ParameterOutOfRange):
            make_dicyclic(1)
        with self.assertRaises(OrderCapExceeded):
            make_symmetric(7, Settings(max_order=1000))
        with self.assertRaises(OrderCapExceeded):
            direct_product(make_cyclic(40), make_cyclic(40), Settings(max_order=1000))


class TestSpecParser(unittest.TestCase):
    """Test parse_group_spec and GroupSpec."""

    def test_simple(self):
        spec = parse_group_spec("sym:4")
        self.assertEqual(spec, GroupSpec("sym", (4,)))
        self.assertEqual(spec.build().order, 24)

    def test_product(self):
        spec = parse_group_spec("product:dihedral:4,cyclic:3")
        G = spec.build()
        self.assertEqual(G.order, 24)
        self.assertEqual(G.name, "D4xC3")

    def test_nested_product_and_two_parameters(self):
        spec = parse_group_spec("product:product:elemab:2,2,cyclic:3,sym:3")
        self.assertEqual(spec_order(spec), 72)
        self.assertEqual(spec.children[0].children[0].params, (2, 2))

    def test_render_round_trip(self):
        texts = ["sym:4", "elemab:3,2", "product:dihedral:4,cyclic:3",
                 "product:product:cyclic:2,cyclic:2,affine:5", "file:groups/s3.json"]
        for text in texts:
            self.assertEqual(parse_group_spec(text).render(), text)
        for spec in builtin_specs(64):
            self.assertEqual(parse_group_spec(spec.render()), spec)

    def test_errors(self):
        with self.assertRaises(ParameterOutOfRange):
            parse_group_spec("sym:9")
        with self.assertRaises(UnknownFamily) as ctx:
            parse_group_spec("product:cyclic:2,mathieu:11")
        self.assertEqual(ctx.exception.position, 17)
        with self.assertRaises(ParseError) as ctx:
            parse_group_spec("sym:")
        self.assertEqual(ctx.exception.position, 4)
        with self.assertRaises(ParseError):
            parse_group_spec("cyclic:3 junk")
        with self.assertRaises(ParseError):
            parse_group_spec("product:cyclic:3")
        with self.assertRaises(ParseError):
            parse_group_spec("elemab:2")

    def test_file_spec(self):
        S3 = make_symmetric(3)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "s3.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump(S3.to_dict(), f)
            G = parse_group_spec(f"product:file:{path},cyclic:2").build()
            self.assertEqual(G.order, 12)

            gens_path = os.path.join(tmp, "d4.json")
            with open(gens_path, "w", encoding="utf-8") as f:
                json.dump({"name": "D4", "degree": 4, "generators": [[1, 2, 3, 0], [3, 2, 1, 0]]}, f)
            self.assertEqual(parse_group_spec(f"gens:{gens_path}").build().order, 8)


class TestBuiltinCatalog(unittest.TestCase):
    """Test the built-in catalog listing."""

    def test_sorted_and_bounded(self):
        groups = builtin_catalog(30)
        orders = [G.order for G in groups]
        self.assertEqual(orders, sorted(orders))
        self.assertLessEqual(max(orders), 30)
        names = [G.name for G in groups]
        self.assertEqual(len(names), len(set(names)), "Names should be unique")
        for name in ("C1", "S3", "S4", "A4", "D4", "Dic2", "E_8", "H27", "AGL1_5", "S3xC2"):
            self.assertIn(name, names)

    def test_cap_limits_catalog(self):
        groups = builtin_catalog(200, Settings(max_order=24))
        self.assertLessEqual(max(G.order for G in groups), 24)


if __name__ == '__main__':
    unittest.main()
