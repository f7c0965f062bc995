"""Edge-transitive maps on surfaces via the flag-permutation model."""

__version__ = "0.1.0"
