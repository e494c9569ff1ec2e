"""
Service layer for isoclass
"""

from .discform_service import DiscriminantFormService
from .classnumber_service import ClassNumberService
from .unimodular_service import UnimodularService
from .embedding_service import EmbeddingService
from .lattice_service import LatticeService
from .theta_service import ThetaService
from .ihs_service import IHSService

__all__ = [
    "DiscriminantFormService",
    "ClassNumberService",
    "UnimodularService",
    "EmbeddingService",
    "LatticeService",
    "ThetaService",
    "IHSService",
]
