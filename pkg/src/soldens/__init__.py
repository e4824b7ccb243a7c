"""Exact density, covering, and partition computations on finite groups,
eventually periodic integer sets, free-group words, and finitely supported
permutations."""

__version__ = "0.1.0"

from . import densities, games, groups, measures, partitions, perms, simplex, words, zline  # noqa: F401
