"""Exact string/band module calculus for a tame symmetric algebra and the
group algebras it is Morita equivalent to, with a verification CLI."""

__version__ = "0.1.0"
