"""
abelzeta
Exact zeta functions, class numbers and bound checks for Kummer and
Artin-Schreier covers of the rational function field over a finite field.
"""

from ._version import __version__

__all__ = ["__version__"]
