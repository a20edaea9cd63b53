"""GKM graphs and equivariant cohomology of reductive monoid embeddings."""
__version__ = "0.1.0"
