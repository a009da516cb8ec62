"""Batch scanning of groups against the theorem checkers."""
