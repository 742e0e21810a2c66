"""aci-betti: graded Betti tables of n+1 general forms in n variables."""

__version__ = "0.1.0"
