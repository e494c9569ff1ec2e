"""
Command groups for the isoclass CLI
"""

from . import a2, classnumber, genus, ihs, k3, oracle, theta, unimodular, vectors

ROUTERS = [genus, unimodular, k3, classnumber, vectors, a2, theta, ihs, oracle]

__all__ = ["ROUTERS"]
