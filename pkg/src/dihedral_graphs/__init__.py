"""Intersection graphs of subgroups of dihedral groups, with exact invariants."""

__version__ = "0.1.0"
