"""grouplab: finite groups, small conjugacy classes and M(G)."""

__version__ = "1.0.0"
