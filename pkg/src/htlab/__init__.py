"""Exact-arithmetic toolkit for finite local algebras and the hypersurface
equations of induced additive actions."""

__version__ = "0.1.0"
