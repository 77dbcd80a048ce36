"""Exact verification of the sigma-involution groups of c=4/5 Virasoro vectors.

Modules: ``linalg`` (exact integer algebra), ``lattices``, ``codes`` (F4 codes
and Eisenstein lattices), ``virasoro``, ``sigma`` (symbolic models and the
Griess engine), ``permgroup``, ``f3`` (quadratic spaces over F3), ``suites``
and ``cli``.
"""

__version__ = "0.1.0"
