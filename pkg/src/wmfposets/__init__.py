"""Exact combinatorics of weight posets of simple Lie algebras."""

from .root_system import (
    RootSystem,
    RootSystemError,
    SimpleType,
    build_root_system,
    cartan_determinant,
    cartan_matrix,
)

__all__ = [
    "RootSystem",
    "RootSystemError",
    "SimpleType",
    "build_root_system",
    "cartan_determinant",
    "cartan_matrix",
]

__version__ = "0.1.0"
