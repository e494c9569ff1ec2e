"""
isoclass application package
"""

__version__ = "1.0.0"
__description__ = "Odd prime order isometries of unimodular and p-elementary lattices"
