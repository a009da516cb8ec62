"""Group construction and subgroup machinery."""
