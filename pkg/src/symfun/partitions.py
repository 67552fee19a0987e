from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from src.errors import DomainError


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise DomainError(f"negative part in partition {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts are not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts: int) -> 'Partition':
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        if i < len(self.parts):
            return self.parts[i]
        return 0

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> 'Partition':
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j

    def contains(self, other: 'Partition') -> bool:
        return all(self[i] >= other[i] for i in range(len(other)))

    def fits_box(self, rows: int, cols: int) -> bool:
        return self.length <= rows and (not self.parts or self.parts[0] <= cols)

    def padded(self, n: int) -> Tuple[int, ...]:
        if self.length > n:
            raise DomainError(f"partition {self} has more than {n} rows")
        return self.parts + (0,) * (n - self.length)

    def hook(self, i: int, j: int) -> int:
        return self.parts[i] - j + self.conjugate()[j] - i - 1


def complement(partition: Partition, rows: int, cols: int) -> Partition:
    if not partition.fits_box(rows, cols):
        raise DomainError(f"{partition} does not fit a {rows}x{cols} box")
    return Partition(tuple(cols - partition[rows - 1 - i] for i in range(rows)))


def partitions_of(n: int, max_length: Optional[int] = None,
                  max_part: Optional[int] = None) -> List[Partition]:
    max_part = n if max_part is None else min(max_part, n)
    max_length = n if max_length is None else max_length
    out: List[Partition] = []

    def extend(remaining: int, bound: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) >= max_length:
            return
        for p in range(min(bound, remaining), 0, -1):
            extend(remaining - p, p, prefix + (p,))

    extend(n, max_part, ())
    return out


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    out = []
    for n in range(rows * cols + 1):
        out.extend(partitions_of(n, max_length=rows, max_part=cols))
    return out


class SchurVector:
    """Finite integer combination of Schur classes indexed by partitions."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Dict[Partition, int]] = None):
        self._terms = {p: c for p, c in (terms or {}).items() if c != 0}

    @classmethod
    def single(cls, partition: Partition, coefficient: int = 1) -> 'SchurVector':
        return cls({partition: coefficient})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Partition, int]]) -> 'SchurVector':
        terms: Dict[Partition, int] = {}
        for p, c in pairs:
            terms[p] = terms.get(p, 0) + c
        return cls(terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].parts, reverse=True)

    def coefficient(self, partition: Partition) -> int:
        return self._terms.get(partition, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: 'SchurVector') -> 'SchurVector':
        terms = dict(self._terms)
        for p, c in other._terms.items():
            terms[p] = terms.get(p, 0) + c
        return SchurVector(terms)

    def __sub__(self, other: 'SchurVector') -> 'SchurVector':
        return self + other.scale(-1)

    def scale(self, factor: int) -> 'SchurVector':
        return SchurVector({p: c * factor for p, c in self._terms.items()})

    def __eq__(self, other):
        return isinstance(other, SchurVector) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for p, c in self.items():
            label = f"s{p}"
            chunks.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(chunks)

    __repr__ = __str__


def weyl_dim(weight: Iterable[int], n: int) -> int:
    """Dimension of the irreducible GL_n representation with highest weight `weight`."""
    weight = tuple(weight)
    if any(weight[n:]):
        # a partition with more than n rows has no GL_n representation
        if min(weight) >= 0:
            return 0
        raise DomainError(f"weight {weight} has more than {n} entries")
    weight = weight[:n] + (0,) * (n - len(weight))
    if any(weight[i] < weight[i + 1] for i in range(n - 1)):
        raise DomainError(f"weight {weight} is not dominant")
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(weight[i] - weight[j] + j - i, j - i)
    return int(value)
