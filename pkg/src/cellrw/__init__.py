"""cellrw: a string-diagram rewriting engine and proof kernel for strict
n-categories (n <= 4), with the free-adjunction presentations and their
machine-checked coherence computations as shipped data."""

__version__ = "0.1.0"
