"""Tests for grouplab."""
