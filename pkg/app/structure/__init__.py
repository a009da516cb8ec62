"""Conjugacy classes, series, and the Fitting subgroup."""
