from functools import lru_cache
from typing import List, Tuple

from src.bott.cohomology import bott_cohomology
from src.bott.flags import FlagType, FlagVariety
from src.errors import DomainError
from src.symfun.characters import GLCharacter, schur_decompose, wedge_of_character

FIBER = FlagVariety.single(FlagType.projective(5))

# coefficient bundles on the fibre P(V_6): the trivial bundle, Q_W^* = wedge^3 Q^*,
# and the relative cotangent bundle U (x) Q^*
COEFFICIENTS = ('O', 'QW*', 'Omega')


def _coefficient(name: str) -> GLCharacter:
    if name == 'O':
        return FIBER.trivial_character()
    if name == 'QW*':
        return wedge_of_character(FIBER.block_character(0, 1, dual=True), 3)
    if name == 'Omega':
        return FIBER.block_character(0, 0) * FIBER.block_character(0, 1, dual=True)
    raise DomainError(f"unknown coefficient bundle {name}; expected one of {COEFFICIENTS}")


@lru_cache(maxsize=None)
def conormal_power(i: int) -> GLCharacter:
    if not 0 <= i <= 10:
        raise DomainError(f"exterior power {i} of Q_W^* is out of range")
    return wedge_of_character(_coefficient('QW*'), i)


@lru_cache(maxsize=None)
def relative_pushforward(i: int, coefficient: str = 'O') -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """Higher direct images of wedge^i Q_W^* (x) G along P(E) -> X.

    Each entry (q, lambda) stands for a copy of S_lambda E^* in R^q; repeated
    entries mean multiplicity.
    """
    chi = conormal_power(i) * _coefficient(coefficient)
    out: List[Tuple[int, Tuple[int, ...]]] = []
    for weight, mult in schur_decompose(chi):
        result = bott_cohomology(FIBER, weight)
        if result is None:
            continue
        out.extend([(result.degree, result.highest_weight)] * mult)
    out.sort(key=lambda entry: (entry[0], tuple(-x for x in entry[1])))
    return tuple(out)


def pushforward_table(coefficient: str = 'O') -> List[Tuple[int, int, Tuple[Tuple[int, ...], ...]]]:
    """Rows (i, q, [lambda, ...]) of the direct images for i = 0..10."""
    rows = []
    for i in range(11):
        by_degree = {}
        for q, lam in relative_pushforward(i, coefficient):
            by_degree.setdefault(q, []).append(lam)
        for q in sorted(by_degree):
            rows.append((i, q, tuple(sorted(by_degree[q], reverse=True))))
    return rows
