"""
Gauss Lintel

Gauss diagrams as lintels: canonization, interlacement-graph realizability
criteria, a genus oracle and exhaustive enumeration.
"""

__version__ = "0.1.0"
