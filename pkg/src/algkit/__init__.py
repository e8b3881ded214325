"""Exact structure-constant verification for NS-Poisson, F-manifold and related algebras."""

__version__ = "0.1.0"
