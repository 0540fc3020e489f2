"""Strands algebras, higher Auslander algebras and Bruhat interval complexes."""

__version__ = "0.1.0"
SCHEMA_VERSION = 1
