"""Validation of Cayley tables."""
