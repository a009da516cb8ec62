"""Tests for catalog file ingestion."""
import json
import os
import tempfile
import unittest

from app.catalog.families import make_symmetric
from app.data_import.catalog_loader import load_catalog, load_group_file
from app.domain.errors import CatalogFormatError, CatalogIOError, CatalogValidationError
from app.export.json_exporter import JSONExporter

NON_ASSOCIATIVE = {
    "name": "loop5",
    "order": 5,
    "table": [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ],
}


class TestCatalogLoader(unittest.TestCase):
    """Test load_catalog and load_group_file."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.s3 = make_symmetric(3)

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, content):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(content if isinstance(content, str) else json.dumps(content))
        return path

    def test_empty_file(self):
        self.assertEqual(load_catalog(self.write("empty.json", "")), [])

    def test_s3_table(self):
        groups = load_catalog(self.write("s3.json", [self.s3.to_dict()]))
        self.assertEqual(len(groups), 1)
        self.assertEqual(groups[0].order, 6)
        self.assertEqual(groups[0].name, "S3")
        self.assertTrue(groups[0].same_table(self.s3))

    def test_generator_record(self):
        record = {"name": "D4", "degree": 4, "generators": [[1, 2, 3, 0], [3, 2, 1, 0]]}
        groups = load_catalog(self.write("d4.json", [record]))
        self.assertEqual(groups[0].order, 8)

    def test_non_associative_record(self):
        path = self.write("bad.json", [self.s3.to_dict(), NON_ASSOCIATIVE])
        with self.assertLogs("app.data_import.catalog_loader", level="WARNING"):
            with self.assertRaises(CatalogValidationError) as ctx:
                load_catalog(path)
        self.assertEqual(ctx.exception.record_index, 1)
        self.assertIn("associative", ctx.exception.reason)

    def test_bad_permutation(self):
        record = {"name": "bad", "degree": 3, "generators": [[0, 0, 1]]}
        with self.assertRaises(CatalogValidationError):
            load_catalog(self.write("bad.json", [record]))

    def test_duplicates_are_dropped(self):
        path = self.write("dup.json", [self.s3.to_dict(), self.s3.to_dict()])
        with self.assertLogs("app.data_import.catalog_loader", level="WARNING") as logs:
            groups = load_catalog(path)
        self.assertEqual(len(groups), 1)
        self.assertTrue(any("duplicates" in line for line in logs.output))

    def test_format_errors(self):
        with self.assertRaises(CatalogFormatError):
            load_catalog(self.write("obj.json", {"name": "x"}))
        with self.assertRaises(CatalogFormatError) as ctx:
            load_catalog(self.write("missing.json", [self.s3.to_dict(), {"name": "x", "order": 1}]))
        self.assertEqual(ctx.exception.record_index, 1)
        with self.assertRaises(CatalogFormatError):
            load_catalog(self.write("rows.json", [{"name": "x", "order": 2, "table": [[0, 1]]}]))
        with self.assertRaises(CatalogFormatError):
            load_catalog(self.write("broken.json", "[{"))

    def test_missing_file(self):
        with self.assertRaises(CatalogIOError):
            load_catalog(os.path.join(self.tmp.name, "nope.json"))

    def test_export_reload(self):
        path = os.path.join(self.tmp.name, "export.json")
        JSONExporter.export_group(self.s3, path)
        self.assertTrue(load_catalog(path)[0].same_table(self.s3))
        self.assertTrue(load_group_file(path).same_table(self.s3))

    def test_single_record_file(self):
        path = self.write("single.json", self.s3.to_dict())
        self.assertEqual(load_group_file(path).order, 6)


if __name__ == '__main__':
    unittest.main()
