"""
Registry of the known deformation types and their monodromy data
"""

from typing import Dict

from app.schemas.ihs import DeformationType, DeformationTypeName, ExcessLattice
from app.schemas.lattice import GroupKind

DEFORMATION_TYPES: Dict[DeformationTypeName, DeformationType] = {
    DeformationTypeName.K3: DeformationType(
        name=DeformationTypeName.K3,
        ambient_signature=(3, 19),
        excess=ExcessLattice.NONE,
    ),
    DeformationTypeName.K3N: DeformationType(
        name=DeformationTypeName.K3N,
        ambient_signature=(4, 20),
        excess=ExcessLattice.RANK1_MINUS,
        group=GroupKind.O,
    ),
    DeformationTypeName.KUMN: DeformationType(
        name=DeformationTypeName.KUMN,
        ambient_signature=(4, 4),
        excess=ExcessLattice.RANK1_PLUS,
        group=GroupKind.SO,
    ),
    DeformationTypeName.OG6: DeformationType(
        name=DeformationTypeName.OG6,
        ambient_signature=(5, 5),
        excess=ExcessLattice.DIAGONAL_TWO,
        group=GroupKind.O,
    ),
    DeformationTypeName.OG10: DeformationType(
        name=DeformationTypeName.OG10,
        ambient_signature=(5, 21),
        excess=ExcessLattice.A2,
        group=GroupKind.O,
    ),
}


def deformation_type(name: DeformationTypeName) -> DeformationType:
    return DEFORMATION_TYPES[DeformationTypeName(name)]
