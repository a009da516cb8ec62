"""Catalog ingestion: Cayley-table and permutation-generator files."""
