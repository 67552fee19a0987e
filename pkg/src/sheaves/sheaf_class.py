from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import List, Sequence, Tuple

import sympy

from src.chow.graded import ChowRing, GradedClass
from src.errors import DomainError
from src.symfun.partitions import Partition


@lru_cache(maxsize=None)
def todd_log_coefficients(n: int) -> Tuple[Fraction, ...]:
    """Coefficients a_1..a_n of log(x / (1 - exp(-x)))."""
    out = []
    for m in range(1, n + 1):
        if m == 1:
            out.append(Fraction(1, 2))
        elif m % 2:
            out.append(Fraction(0))
        else:
            b = sympy.bernoulli(m)
            out.append(-Fraction(int(b.p), int(b.q)) / (m * factorial(m)))
    return tuple(out)


def _sign_of(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class SheafClass:
    """K-theory class of a (virtual) sheaf, stored through its Chern character."""

    __slots__ = ('ch', '_chern')

    def __init__(self, ch: GradedClass):
        self.ch = ch
        self._chern = None

    @classmethod
    def trivial(cls, ring: ChowRing, n: int = 1) -> 'SheafClass':
        return cls(ring.scalar(n))

    @classmethod
    def line(cls, c1: GradedClass) -> 'SheafClass':
        return cls(c1.exp())

    @classmethod
    def from_chern(cls, rank: int, chern: GradedClass) -> 'SheafClass':
        ring = chern.ring
        log_c = chern.log()
        ch = ring.scalar(rank)
        for m, comp in sorted(log_c.components.items()):
            if m == 0:
                continue
            ch = ch + GradedClass(ring, comp) * Fraction((-1) ** (m - 1), factorial(m - 1))
        sheaf = cls(ch)
        sheaf._chern = chern
        return sheaf

    @property
    def ring(self) -> ChowRing:
        return self.ch.ring

    @property
    def rank(self) -> int:
        r = self.ch.constant()
        if r.denominator != 1:
            raise DomainError(f"non-integral rank {r}")
        return int(r)

    def __repr__(self):
        return f"SheafClass(rank={self.rank}, ch={self.ch})"

    def lift(self, ring: ChowRing) -> 'SheafClass':
        if ring is self.ring:
            return self
        return SheafClass(ring.lift(self.ch))

    def embed(self, ring: ChowRing, positions: Sequence[int]) -> 'SheafClass':
        return SheafClass(ring.embed(self.ch, positions))

    def _other(self, other) -> 'SheafClass':
        if isinstance(other, SheafClass):
            return other
        if isinstance(other, int):
            return SheafClass.trivial(self.ring, other)
        raise TypeError(f"cannot combine a sheaf class with {other!r}")

    def __add__(self, other) -> 'SheafClass':
        return SheafClass(self.ch + self._other(other).ch)

    __radd__ = __add__

    def __sub__(self, other) -> 'SheafClass':
        return SheafClass(self.ch - self._other(other).ch)

    def __rsub__(self, other) -> 'SheafClass':
        return SheafClass(self._other(other).ch - self.ch)

    def __neg__(self) -> 'SheafClass':
        return SheafClass(-self.ch)

    def __mul__(self, other) -> 'SheafClass':
        if isinstance(other, int):
            return SheafClass(self.ch * other)
        return SheafClass(self.ch * other.ch)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SheafClass) and self.ch == other.ch

    __hash__ = None

    @property
    def chern(self) -> GradedClass:
        if self._chern is None:
            ring = self.ring
            log_c = ring.zero()
            for m, comp in sorted(self.ch.components.items()):
                if m == 0:
                    continue
                log_c = log_c + GradedClass(ring, comp) * ((-1) ** (m - 1) * factorial(m - 1))
            self._chern = log_c.exp()
        return self._chern

    def c(self, k: int) -> GradedClass:
        return self.chern.part(k)

    def c1(self) -> GradedClass:
        return self.c(1)

    def top(self) -> GradedClass:
        rank = self.rank
        if rank < 0:
            raise DomainError("top Chern class of a class with negative rank")
        return self.c(rank)

    def segre(self) -> GradedClass:
        return self.chern.inverse()

    def todd(self) -> GradedClass:
        ring = self.ring
        coeffs = todd_log_coefficients(ring.dim)
        log_td = ring.zero()
        for m, comp in self.ch.components.items():
            if m == 0 or m > ring.dim:
                continue
            a = coeffs[m - 1]
            if a:
                log_td = log_td + GradedClass(ring, comp) * (a * factorial(m))
        return log_td.exp()

    def dual(self) -> 'SheafClass':
        return SheafClass(self.ch.scale_degrees(-1))

    def adams(self, k: int) -> 'SheafClass':
        return SheafClass(self.ch.scale_degrees(k))

    def det(self) -> 'SheafClass':
        return SheafClass.line(self.c1())

    def tensor_line(self, line: 'SheafClass') -> 'SheafClass':
        if line.rank != 1:
            raise DomainError("tensor_line expects a line bundle")
        return self * line

    def wedge(self, k: int) -> 'SheafClass':
        return self._newton_powers(k, alternating=True)[k]

    def sym(self, k: int) -> 'SheafClass':
        return self._newton_powers(k, alternating=False)[k]

    def wedges(self, k: int) -> List['SheafClass']:
        return self._newton_powers(k, alternating=True)

    def _newton_powers(self, k: int, alternating: bool) -> List['SheafClass']:
        if k < 0:
            raise DomainError("negative power of a sheaf class")
        ring = self.ring
        adams = [None] + [self.ch.scale_degrees(i) for i in range(1, k + 1)]
        powers = [ring.one()]
        for j in range(1, k + 1):
            acc = ring.zero()
            for i in range(1, j + 1):
                term = powers[j - i] * adams[i]
                if alternating and i % 2 == 0:
                    term = -term
                acc = acc + term
            powers.append(acc * Fraction(1, j))
        return [SheafClass(p) for p in powers]

    def schur(self, partition: Partition) -> 'SheafClass':
        """S_lambda through the dual Jacobi-Trudi determinant in exterior powers."""
        ring = self.ring
        if partition.size == 0:
            return SheafClass.trivial(ring)
        conj = partition.conjugate()
        size = conj.length
        wedges = self.wedges(conj[0] + size)

        def entry(i: int, j: int) -> GradedClass:
            k = conj[i] - i + j
            if k < 0:
                return ring.zero()
            return wedges[k].ch

        total = ring.zero()
        for perm in permutations(range(size)):
            term = ring.scalar(_sign_of(perm))
            for i in range(size):
                term = term * entry(i, perm[i])
                if term.is_zero():
                    break
            total = total + term
        return SheafClass(total)
