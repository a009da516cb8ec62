"""One checker per statement about small classes and M(G)."""
