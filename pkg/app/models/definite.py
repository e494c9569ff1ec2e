"""
Named positive definite rank two lattices and the genera they fill
"""

from typing import Dict, List

from app.schemas.genus import GenusSymbol
from app.schemas.lattice import DefiniteLatticeId, GramLattice
from app.utils.errors import UnsupportedRangeError

DEFINITE_GRAMS: Dict[DefiniteLatticeId, tuple] = {
    DefiniteLatticeId.A2NEG: ((2, 1), (1, 2)),
    DefiniteLatticeId.K7: ((2, 1), (1, 4)),
    DefiniteLatticeId.F23A: ((2, 1), (1, 12)),
    DefiniteLatticeId.F23B: ((4, 1), (1, 6)),
}

# Theta series are theta3(z)theta3(ez) + theta2(z)theta2(ez) with this e
THETA_SCALE: Dict[DefiniteLatticeId, int] = {
    DefiniteLatticeId.A2NEG: 3,
    DefiniteLatticeId.K7: 7,
    DefiniteLatticeId.F23A: 23,
    DefiniteLatticeId.F23B: 23,
}

# Lattices whose theta series also subtracts 2 eta(z) eta(ez)
ETA_CORRECTED = {DefiniteLatticeId.F23B}

# Isometry classes in each positive definite even rank two genus that occurs
GENUS_CLASSES: Dict[str, List[DefiniteLatticeId]] = {
    "II_(2,0)3^-1": [DefiniteLatticeId.A2NEG],
    "II_(2,0)7^+1": [DefiniteLatticeId.K7],
    "II_(2,0)23^+1": [DefiniteLatticeId.F23A, DefiniteLatticeId.F23B],
}


def gram_lattice(lattice_id: DefiniteLatticeId) -> GramLattice:
    return GramLattice(gram=DEFINITE_GRAMS[lattice_id])


def classes_in_genus(genus: GenusSymbol) -> List[DefiniteLatticeId]:
    """Representatives of every isometry class of a definite rank two genus"""
    classes = GENUS_CLASSES.get(str(genus))
    if classes is None:
        raise UnsupportedRangeError(
            f"no class list for {genus}; known definite genera: {', '.join(GENUS_CLASSES)}"
        )
    return classes
