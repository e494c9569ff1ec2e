"""
Parameter sweeps for isoclass
"""

from .sweep_tasks import run_sweep

__all__ = ["run_sweep"]
