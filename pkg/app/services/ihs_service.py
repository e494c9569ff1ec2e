"""
Classification of odd prime order automorphisms of IHS manifolds
"""

import logging
from collections import Counter
from functools import partial
from typing import List, Optional, Tuple

from sympy import primerange

from app.models.definite import classes_in_genus, gram_lattice
from app.models.deformation import deformation_type
from app.schemas.embedding import EmbeddingQuery
from app.schemas.genus import GenusSymbol, Parity
from app.schemas.ihs import (
    AmbiguityTableEntry,
    ClassificationRow,
    DeformationType,
    DeformationTypeName,
    ExcessLattice,
)
from app.schemas.isometry import IsometryInvariants
from app.schemas.lattice import GroupKind
from app.services.classnumber_service import ClassNumberService
from app.services.embedding_service import EmbeddingService
from app.services.lattice_service import LatticeService
from app.services.unimodular_service import UnimodularService
from app.tasks.sweep_tasks import run_sweep
from app.utils.arith import require_odd_prime
from app.utils.errors import (
    ArgumentError,
    ConsistencyError,
    DomainPreconditionError,
    UnsupportedClassificationError,
    UnsupportedRangeError,
)

logger = logging.getLogger(__name__)

RANK_ONE_TYPES = (DeformationTypeName.K3N, DeformationTypeName.KUMN)
TABLE_PRIMES = list(primerange(3, 24))


def _invariants(kind: DeformationType, p: int, r: int, a: int) -> IsometryInvariants:
    l_plus, l_minus = kind.ambient_signature
    return IsometryInvariants(
        p=p,
        l_plus=l_plus,
        l_minus=l_minus,
        parity=Parity.EVEN,
        s_plus=2,
        s_minus=l_plus + l_minus - 2 - r,
        n=a,
    )


def _is_definite_rank_two(genus: GenusSymbol) -> bool:
    return genus.l_minus == 0 and genus.rank == 2


def _is_indefinite_supported(genus: GenusSymbol) -> bool:
    return genus.l_plus >= 2 and genus.l_minus >= 1 and genus.rank >= 4


def _definite_orbit_counts(genus: GenusSymbol, group: GroupKind, k: int) -> Counter:
    """Orbits of primitive vectors of norm k, pooled over the genus classes, counted per divisibility"""
    counts: Counter = Counter()
    for lattice_id in classes_in_genus(genus):
        lattice = gram_lattice(lattice_id)
        elements = LatticeService.group(lattice, group)
        for orbit in LatticeService.orbit_decomposition(lattice, elements, k, primitive_only=True):
            counts[orbit.divisibility] += 1
    return counts


def _ambiguous_at(
    name: DeformationTypeName, genus: GenusSymbol, div: Optional[int], n: int
) -> bool:
    kind = deformation_type(name)
    k = kind.excess.square(n)
    if _is_definite_rank_two(genus):
        counts = _definite_orbit_counts(genus, kind.group, k)
        if div is not None:
            return counts[div] >= 2
        return any(count >= 2 for count in counts.values())

    divisibilities = (div,) if div is not None else (1, genus.p)
    return any(
        EmbeddingService.vector_orbits(EmbeddingQuery(genus=genus, k=k, div=d)).orbit_count == 2
        for d in divisibilities
    )


def _log_verdicts(rows: List[ClassificationRow]) -> List[ClassificationRow]:
    """Report rows whose numerical invariants do not pin down the automorphism"""
    for row in rows:
        verdict = row.verdict
        if verdict is None or not (verdict.lattice_orbit_ambiguous or verdict.steinitz_factor > 1):
            continue
        logger.info(
            "%s p=%d r=%d a=%d div=%s: lattice orbit ambiguous %s, Steinitz factor %d",
            row.type.value, row.p, row.r, row.a, row.div,
            verdict.lattice_orbit_ambiguous, verdict.steinitz_factor,
        )
    return rows


class IHSService:
    """Existence rows, vector orbit counts and ambiguity sweeps per deformation type"""

    @staticmethod
    def invariant_genus(name: DeformationTypeName, p: int, r: int, a: int) -> GenusSymbol:
        """Genus of M^g for an existing triple; raises if the triple does not exist"""
        kind = deformation_type(name)
        inv = _invariants(kind, p, r, a)
        genus = UnimodularService.invariant_genus(inv)
        if genus is None:
            raise DomainPreconditionError(f"no {kind.name.value} automorphism with (p, r, a) = ({p}, {r}, {a})")
        return genus

    @staticmethod
    def existing_triples(name: DeformationTypeName, p: int) -> List[Tuple[int, int, GenusSymbol]]:
        """(r, a, genus of M^g) for every existing triple with this p, ordered by (r, a)"""
        kind = deformation_type(name)
        l_plus, l_minus = kind.ambient_signature
        triples = []
        for r in range(kind.invariant_positive, l_plus + l_minus - 1):
            for a in range(0, r + 1):
                genus = UnimodularService.invariant_genus(_invariants(kind, p, r, a))
                if genus is not None:
                    triples.append((r, a, genus))
        return triples

    @staticmethod
    def classify(name: DeformationTypeName, p: int, n: Optional[int] = None) -> List[ClassificationRow]:
        kind = deformation_type(name)
        if kind.name == DeformationTypeName.OG6:
            raise UnsupportedClassificationError("vector orbit classification of OG6 is not implemented")
        require_odd_prime(p)
        if kind.name == DeformationTypeName.K3:
            return _log_verdicts(IHSService.k3_rows(p))
        if kind.name == DeformationTypeName.OG10:
            return _log_verdicts(IHSService.og10_rows(p))
        if n is not None and n < 2:
            raise ArgumentError(f"the manifold index n must be at least 2, got {n}")

        triples = IHSService.existing_triples(name, p)
        steinitz = ClassNumberService.relative_class_number(p) if triples else 1
        rows: List[ClassificationRow] = []
        for r, a, genus in triples:
            if n is None:
                rows.append(ClassificationRow(type=kind.name, p=p, r=r, a=a, steinitz=steinitz, genus=genus))
                continue
            k = kind.excess.square(n)
            for div in (1, p):
                orbits = IHSService._orbit_count(kind, genus, k, div)
                if orbits == 0:
                    continue
                rows.append(
                    ClassificationRow(
                        type=kind.name,
                        p=p,
                        r=r,
                        a=a,
                        div=div,
                        orbits=orbits,
                        ambiguous=None if orbits == "unknown" else orbits >= 2,
                        steinitz=steinitz,
                        genus=genus,
                    )
                )
        return _log_verdicts(rows)

    @staticmethod
    def _orbit_count(kind: DeformationType, genus: GenusSymbol, k: int, div: int):
        if _is_definite_rank_two(genus):
            try:
                return _definite_orbit_counts(genus, kind.group, k)[div]
            except UnsupportedRangeError:
                logger.debug("no class list for %s; orbit count unknown", genus)
                return "unknown"
        report = EmbeddingService.vector_orbits(EmbeddingQuery(genus=genus, k=k, div=div))
        return report.orbit_count

    @staticmethod
    def k3_rows(p: int) -> List[ClassificationRow]:
        """The (p, r, a) sweep of the K3 existence criterion"""
        require_odd_prime(p)
        rows = []
        for r in range(1, 22):
            for a in range(0, 22):
                if not UnimodularService.k3_exists(p, r, a):
                    continue
                genus = UnimodularService.invariant_genus(UnimodularService.k3_invariants(p, r, a))
                if genus is None:
                    raise ConsistencyError(f"K3 triple ({p}, {r}, {a}) has no isometry of II_(3,19)")
                rows.append(
                    ClassificationRow(
                        type=DeformationTypeName.K3,
                        p=p,
                        r=r,
                        a=a,
                        ambiguous=False,
                        steinitz=ClassNumberService.relative_class_number(p),
                        genus=genus,
                    )
                )
        return rows

    @staticmethod
    def og10_rows(p: int) -> List[ClassificationRow]:
        """Rows (r, a, div of A2(-1)) for automorphisms of OG10 type"""
        require_odd_prime(p)
        rows = []
        for r, a, genus in IHSService.existing_triples(DeformationTypeName.OG10, p):
            if genus.l_minus <= 0 or genus.l_minus % 2 == 0:
                continue
            for div in (1, 3):
                if div == 3 and p != 3:
                    continue
                if not EmbeddingService.a2_embeds(genus.l_minus, p, genus.eps, genus.n, div):
                    continue
                rows.append(
                    ClassificationRow(
                        type=DeformationTypeName.OG10,
                        p=p,
                        r=r,
                        a=a,
                        div=div,
                        orbits=1,
                        ambiguous=False,
                        steinitz=ClassNumberService.relative_class_number(p),
                        genus=genus,
                    )
                )
        return rows

    @staticmethod
    def ambiguous_n(
        name: DeformationTypeName, p: int, r: int, a: int, div: Optional[int], n_max: int
    ) -> List[int]:
        """Indices n <= n_max where two or more orbits share the numerical invariants"""
        name = DeformationTypeName(name)
        if name not in RANK_ONE_TYPES:
            raise ArgumentError(f"ambiguity sweeps are defined for K3n and Kumn, not {name.value}")
        require_odd_prime(p)
        if div not in (None, 1, p):
            raise ArgumentError(f"divisibility must be 1 or {p}, got {div}")
        genus = IHSService.invariant_genus(name, p, r, a)
        if not (_is_definite_rank_two(genus) or _is_indefinite_supported(genus)):
            raise UnsupportedRangeError(
                f"ambiguity of {genus} is not decided; supported shapes are a definite rank 2 "
                "invariant lattice (r = 2) or an indefinite one with l+ >= 2, l- >= 1 and rank >= 4"
            )

        kind = deformation_type(name)
        indices = list(range(2, n_max + 1))
        if _is_definite_rank_two(genus) and indices:
            # Enumerate once up to the largest norm so every n reuses it
            largest = kind.excess.square(n_max)
            for lattice_id in classes_in_genus(genus):
                LatticeService.short_vectors(gram_lattice(lattice_id), largest)

        flags = run_sweep(partial(_ambiguous_at, name, genus, div), indices)
        result = [n for n, flag in zip(indices, flags) if flag]
        logger.debug("%s %s: %d ambiguous indices up to %d", name.value, genus, len(result), n_max)
        return result

    @staticmethod
    def induced_realizable(name: DeformationTypeName, p: int, r: int, a: int) -> bool:
        """Whether the action is realized by automorphisms induced from a K3 or abelian surface"""
        name = DeformationTypeName(name)
        if name not in RANK_ONE_TYPES:
            raise ArgumentError(f"induced automorphisms are defined for K3n and Kumn, not {name.value}")
        genus = IHSService.invariant_genus(name, p, r, a)
        return EmbeddingService.contains_U(genus)

    @staticmethod
    def ambiguity_table(name: DeformationTypeName, n_max: int) -> List[AmbiguityTableEntry]:
        """ambiguous_n over every decidable existing row with p <= 23; empty rows omitted"""
        name = DeformationTypeName(name)
        if name not in RANK_ONE_TYPES:
            raise ArgumentError(f"ambiguity tables are defined for K3n and Kumn, not {name.value}")
        entries = []
        for p in TABLE_PRIMES:
            for r, a, genus in IHSService.existing_triples(name, p):
                if _is_definite_rank_two(genus):
                    try:
                        classes_in_genus(genus)
                    except UnsupportedRangeError:
                        continue
                    divisibilities = (None,)
                elif _is_indefinite_supported(genus) and genus.rank == 4:
                    divisibilities = (1, p)
                else:
                    # Two orbits need rank 4; other shapes never produce entries
                    continue
                for div in divisibilities:
                    found = IHSService.ambiguous_n(name, p, r, a, div, n_max)
                    if found:
                        entries.append(AmbiguityTableEntry(type=name, p=p, r=r, a=a, div=div, n=found))
        return entries
