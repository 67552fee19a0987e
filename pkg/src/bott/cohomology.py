from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from src.bott.flags import FlagType, FlagVariety, Weight
from src.errors import DomainError
from src.symfun.characters import GLCharacter, schur_decompose
from src.sheaves.sheaf_class import SheafClass
from src.symfun.partitions import Partition, weyl_dim
from src.utils.log import get_logger

logger = get_logger('bott')


@dataclass(frozen=True)
class BottResult:
    """Nonzero cohomology of an irreducible homogeneous bundle: H^degree = S_lambda V^*."""

    degree: int
    highest_weights: Tuple[Weight, ...]
    dimension: int

    @property
    def highest_weight(self) -> Weight:
        if len(self.highest_weights) != 1:
            raise DomainError("product flag has one highest weight per factor")
        return self.highest_weights[0]


def _bott_single(flag: FlagType, weight: Weight) -> Optional[Tuple[int, Weight]]:
    shifted = [w + r for w, r in zip(weight, flag.rho)]
    if len(set(shifted)) != len(shifted):
        return None
    inversions = sum(1 for i in range(len(shifted)) for j in range(i + 1, len(shifted))
                     if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    return inversions, tuple(s - r for s, r in zip(ordered, flag.rho))


@lru_cache(maxsize=None)
def bott_cohomology(flag: FlagVariety, weight: Weight) -> Optional[BottResult]:
    weight = tuple(weight)
    degree, tops, dimension = 0, [], 1
    for factor, part in zip(flag.factors, flag.split(weight)):
        start = 0
        for b in factor.blocks:
            block = part[start:start + b]
            if any(block[i] < block[i + 1] for i in range(b - 1)):
                raise DomainError(f"weight {weight} is not dominant on the Levi blocks")
            start += b
        result = _bott_single(factor, part)
        if result is None:
            return None
        q, lam = result
        degree += q
        tops.append(lam)
        dimension *= weyl_dim(lam, factor.n)
    return BottResult(degree, tuple(tops), dimension)


@dataclass
class CohomologyTable:
    """Cohomology of a homogeneous bundle, degree by degree.

    `entries[q]` lists (label, multiplicity, dimension) of the constituents of H^q.
    `bounds[q]` is the (min, max) total dimension when a spectral sequence leaves
    the answer open; exact tables have min == max.
    """

    entries: Dict[int, List[Tuple[object, int, int]]] = field(default_factory=dict)
    bounds: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    euler: int = 0

    def add(self, degree: int, label, multiplicity: int, dimension: int):
        self.entries.setdefault(degree, []).append((label, multiplicity, dimension))
        total = sum(m * d for _, m, d in self.entries[degree])
        self.bounds[degree] = (total, total)
        self.euler = sum((-1) ** q * hi for q, (lo, hi) in self.bounds.items() if lo == hi)

    def dimension(self, degree: int) -> int:
        lo, hi = self.bounds.get(degree, (0, 0))
        if lo != hi:
            raise DomainError(f"H^{degree} is only known to lie in [{lo}, {hi}]")
        return lo

    def interval(self, degree: int) -> Tuple[int, int]:
        return self.bounds.get(degree, (0, 0))

    def is_exact(self) -> bool:
        return all(lo == hi for lo, hi in self.bounds.values())

    def degrees(self) -> List[int]:
        return sorted(q for q, (lo, hi) in self.bounds.items() if hi)

    def to_dict(self) -> dict:
        out = {}
        for q in sorted(self.bounds):
            lo, hi = self.bounds[q]
            if not hi:
                continue
            out[str(q)] = lo if lo == hi else [lo, hi]
        return {'cohomology': out, 'euler': self.euler}


def decompose(chi: GLCharacter, max_dim: int = None) -> List[Tuple[Weight, int]]:
    return schur_decompose(chi, max_dim)


def cohomology_of_character(flag: FlagVariety, chi: GLCharacter, max_dim: int = None) -> CohomologyTable:
    table = CohomologyTable()
    for weight, mult in decompose(chi, max_dim):
        if mult < 0:
            raise DomainError("virtual bundle has no cohomology table")
        result = bott_cohomology(flag, weight)
        logger.debug("%s: weight %s -> %s", flag.name, weight, result)
        if result is None:
            continue
        label = result.highest_weights if len(flag.factors) > 1 else result.highest_weight
        table.add(result.degree, label, mult, result.dimension)
    return table


def serre_dual_weight(flag: FlagVariety, weight: Weight) -> Weight:
    """Highest weight of K tensor the dual of the irreducible bundle with `weight`."""
    canonical = flag.canonical_weight()
    dual = []
    start = 0
    for b in flag.blocks:
        block = weight[start:start + b]
        dual.extend(-x for x in reversed(block))
        start += b
    return tuple(d + k for d, k in zip(dual, canonical))


def irreducible_sheaf(variety, flag: FlagVariety, weight: Weight):
    """Chern-character class of the irreducible bundle with highest weight `weight`.

    Every factor must be a Grassmannian; there the weight (a | b) is S_a U^* (x) S_b Q^*.
    """
    sheaf = variety.trivial(1)
    for index, (factor, part) in enumerate(zip(flag.factors, flag.split(weight))):
        if len(factor.blocks) != 2:
            raise DomainError(f"{factor.name} is not a Grassmannian")
        suffix = str(index + 1) if len(flag.factors) > 1 else ''
        k = factor.blocks[0]
        for name, block in (('U', part[:k]), ('Q', part[k:])):
            shift = min(block)
            dual = variety.sheaf(f"{name}{suffix}").dual()
            piece = dual.schur(Partition(tuple(x - shift for x in block)))
            if shift:
                piece = piece.tensor_line(SheafClass.line(dual.c1() * shift))
            sheaf = sheaf * piece
    return sheaf
