"""Group families, the spec-string parser and the built-in catalog."""
