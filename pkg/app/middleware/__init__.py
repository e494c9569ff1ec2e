"""
Command middleware for isoclass
"""

from .performance import PerformanceMonitor

__all__ = ["PerformanceMonitor"]
