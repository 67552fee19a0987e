from fractions import Fraction
from math import factorial
from typing import Tuple, Union

from src.errors import DomainError
from src.symfun.partitions import Partition, weyl_dim


def rank_variety_numerology(partition: Partition, r: int) -> Tuple[int, int]:
    """(d_lambda, r_lambda) for the Schur functor S_lambda on an r-dimensional space."""
    r_lam = weyl_dim(partition.parts, r)
    numerator = partition.size * r_lam
    if numerator % r:
        raise DomainError(f"d_lambda is not integral for {partition}, r={r}")
    return numerator // r, r_lam


def schur_rank_locus_condition(partition: Partition, r: int) -> bool:
    """Whether d_lambda reaches r^2 - 1, so the rank locus of an S_lambda map is crepant."""
    d_lam, _ = rank_variety_numerology(partition, r)
    return d_lam == r * r - 1


def _inverse_factorial(m: int) -> Fraction:
    if m < 0:
        return Fraction(0)
    return Fraction(1, factorial(m))


def n_value(k: int, l: int, d: int, r: int) -> Union[int, Fraction]:
    """Integer N governing the crepancy condition for (k, l) matrix rank loci."""
    if not (0 <= k <= r <= d) or k + l > d or l < 0:
        raise DomainError(f"invalid parameters k={k}, l={l}, d={d}, r={r}")
    if d - r - 1 < 0 or r - 1 < 0:
        raise DomainError(f"N is undefined for d={d}, r={r}")
    prefactor = factorial(r - 1) * factorial(d - r - 1)
    total = Fraction(0)
    for i in range(0, min(r - k, l) + 1):
        weight = (_inverse_factorial(k + i) * _inverse_factorial(r - k - i)
                  * _inverse_factorial(l - i) * _inverse_factorial(d - r - l + i))
        total += prefactor * weight * ((k + i) * d - (k + l) * r)
    if total.denominator == 1:
        return int(total)
    return total


def crepancy_check(k: int, l: int, d: int, r: int) -> bool:
    """Crepancy condition of the (k, l) matrix rank locus: N equals d."""
    return n_value(k, l, d, r) == d
