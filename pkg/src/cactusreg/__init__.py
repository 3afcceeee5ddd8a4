"""Regularity bounds for binomial edge ideals of graphs whose blocks are
cycles or cliques, with an exact oracle for small graphs."""

__version__ = "0.1.0"
