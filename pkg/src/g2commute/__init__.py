"""Exact Chern class and Chern character calculus around BG2, p-local linear
systems with checkable certificates, and threshold predicates for higher
homotopy commutativity of Lie groups."""

__version__ = "0.1.0"
