"""Tests for the FastAPI endpoints."""
import asyncio
import unittest

from fastapi import HTTPException

import app as package
from app.api.groups import CheckRequest, check_statement, group_info
from app.api.scan import ScanRequest, scan_builtin
from app.main import app as service, health, root


class TestGroupEndpoints(unittest.TestCase):
    """Test /api/groups."""

    def test_info(self):
        data = asyncio.run(group_info("sym:4"))
        self.assertEqual(data["spec"], "sym:4")
        self.assertEqual(data["order"], 24)
        self.assertEqual(data["class_sizes"], [1, 3, 6, 6, 8])
        self.assertNotIn("reports", data)

    def test_info_bad_spec(self):
        with self.assertRaises(HTTPException) as ctx:
            asyncio.run(group_info("mathieu:11"))
        self.assertEqual(ctx.exception.status_code, 400)

    def test_check(self):
        request = CheckRequest(spec="dihedral:4", statement="theorem_C")
        reports = asyncio.run(check_statement(request))
        self.assertEqual(len(reports), 1)
        self.assertIn(reports[0]["verdict"], ("VERIFIED", "HYPOTHESIS_NOT_MET"))

    def test_check_unknown_statement(self):
        request = CheckRequest(spec="cyclic:4", statement="theorem_Z")
        with self.assertRaises(HTTPException) as ctx:
            asyncio.run(check_statement(request))
        self.assertEqual(ctx.exception.status_code, 404)


class TestScanEndpoint(unittest.TestCase):
    """Test /api/scan."""

    def test_small_scan(self):
        data = asyncio.run(scan_builtin(ScanRequest(builtin_max_order=8, statements=["theorem_C"])))
        self.assertEqual(data["statements"], ["theorem_C"])
        self.assertTrue(all(g["order"] <= 8 for g in data["groups"]))
        self.assertEqual(data["counterexamples"], [])

    def test_unknown_statement(self):
        with self.assertRaises(HTTPException) as ctx:
            asyncio.run(scan_builtin(ScanRequest(builtin_max_order=4, statements=["nope"])))
        self.assertEqual(ctx.exception.status_code, 404)


class TestService(unittest.TestCase):

    def test_root_and_health(self):
        self.assertEqual(asyncio.run(health()), {"status": "healthy"})
        self.assertEqual(asyncio.run(root())["message"], "grouplab API")

    def test_project_name(self):
        self.assertEqual(service.title, "grouplab")
        self.assertTrue(package.__doc__.startswith(service.title), package.__doc__)
        self.assertEqual(service.version, package.__version__)


if __name__ == '__main__':
    unittest.main()
