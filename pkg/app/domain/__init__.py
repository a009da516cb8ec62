"""Domain models for finite group computations."""
