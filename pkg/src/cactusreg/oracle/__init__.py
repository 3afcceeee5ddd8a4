"""Exact computation of reg(S/J_G) for small graphs."""
