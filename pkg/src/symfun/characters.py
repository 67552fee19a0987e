from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from src.errors import DomainError
from src.symfun.partitions import Partition

Monomial = Tuple[int, ...]


class GLCharacter:
    """Formal character of a (virtual) representation of a product of GL blocks.

    `terms` maps exponent vectors of length n to multiplicities. `blocks` records
    the Levi block sizes; symmetry is only required inside each block.
    """

    __slots__ = ('n', 'blocks', '_terms')

    def __init__(self, n: int, terms: Dict[Monomial, int] = None, blocks: Sequence[int] = None):
        self.n = n
        self.blocks = tuple(blocks) if blocks is not None else (n,)
        if sum(self.blocks) != n:
            raise DomainError(f"blocks {self.blocks} do not add up to {n}")
        self._terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, n: int, blocks: Sequence[int] = None) -> 'GLCharacter':
        return cls(n, {}, blocks)

    @classmethod
    def trivial(cls, n: int, multiplicity: int = 1, blocks: Sequence[int] = None) -> 'GLCharacter':
        return cls(n, {(0,) * n: multiplicity}, blocks)

    @classmethod
    def from_weights(cls, n: int, weights: Iterable[Monomial], blocks: Sequence[int] = None) -> 'GLCharacter':
        terms: Dict[Monomial, int] = {}
        for w in weights:
            w = tuple(w)
            terms[w] = terms.get(w, 0) + 1
        return cls(n, terms, blocks)

    def _like(self, terms: Dict[Monomial, int]) -> 'GLCharacter':
        return GLCharacter(self.n, terms, self.blocks)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def multiplicity(self, monomial: Monomial) -> int:
        return self._terms.get(tuple(monomial), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_effective(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def dimension(self) -> int:
        return sum(self._terms.values())

    def weights(self) -> List[Monomial]:
        out = []
        for m, c in self.items():
            if c < 0:
                raise DomainError("virtual character has no weight list")
            out.extend([m] * c)
        return out

    def __add__(self, other: 'GLCharacter') -> 'GLCharacter':
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return self._like(terms)

    def __sub__(self, other: 'GLCharacter') -> 'GLCharacter':
        return self + other.scale(-1)

    def __neg__(self) -> 'GLCharacter':
        return self.scale(-1)

    def scale(self, factor: int) -> 'GLCharacter':
        return self._like({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return self._like(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GLCharacter) and self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        return f"GLCharacter(n={self.n}, blocks={self.blocks}, dim={self.dimension()})"

    def adams(self, k: int) -> 'GLCharacter':
        terms: Dict[Monomial, int] = {}
        for m, c in self._terms.items():
            m = tuple(k * a for a in m)
            terms[m] = terms.get(m, 0) + c
        return self._like(terms)

    def dual(self) -> 'GLCharacter':
        return self._like({tuple(-a for a in m): c for m, c in self._terms.items()})

    def block_ranges(self) -> List[range]:
        out, start = [], 0
        for b in self.blocks:
            out.append(range(start, start + b))
            start += b
        return out

    def block_sorted(self, monomial: Monomial) -> Monomial:
        out: List[int] = []
        for r in self.block_ranges():
            out.extend(sorted((monomial[i] for i in r), reverse=True))
        return tuple(out)

    def is_symmetric(self) -> bool:
        return all(self._terms.get(self.block_sorted(m), 0) == c for m, c in self._terms.items())

    def is_dominant(self, monomial: Monomial) -> bool:
        return tuple(monomial) == self.block_sorted(monomial)


def wedge_of_character(chi: GLCharacter, k: int) -> GLCharacter:
    """Exterior power through Newton's identity k e_k = sum (-1)^(i-1) e_(k-i) p_i."""
    if k < 0:
        raise DomainError("negative exterior power")
    _require_effective(chi)
    powers = [GLCharacter.trivial(chi.n, blocks=chi.blocks)]
    for j in range(1, k + 1):
        acc = GLCharacter.zero(chi.n, chi.blocks)
        for i in range(1, j + 1):
            term = powers[j - i] * chi.adams(i)
            acc = acc + (term if i % 2 == 1 else term.scale(-1))
        powers.append(_divide(acc, j))
    return powers[k]


def sym_of_character(chi: GLCharacter, k: int) -> GLCharacter:
    if k < 0:
        raise DomainError("negative symmetric power")
    _require_effective(chi)
    powers = [GLCharacter.trivial(chi.n, blocks=chi.blocks)]
    for j in range(1, k + 1):
        acc = GLCharacter.zero(chi.n, chi.blocks)
        for i in range(1, j + 1):
            acc = acc + powers[j - i] * chi.adams(i)
        powers.append(_divide(acc, j))
    return powers[k]


def _require_effective(chi: GLCharacter):
    if not chi.is_effective():
        raise DomainError("character has a negative multiplicity")


def _divide(chi: GLCharacter, d: int) -> GLCharacter:
    terms = {}
    for m, c in chi._terms.items():
        if c % d:
            raise DomainError("character is not divisible")
        terms[m] = c // d
    return chi._like(terms)


def schur_character(weight: Sequence[int], letters: Sequence[Monomial], n: int,
                    blocks: Sequence[int] = None) -> GLCharacter:
    """Character of S_weight applied to a representation with the given weight list."""
    weight = tuple(weight)
    r = len(letters)
    if len(weight) > r:
        trimmed = weight[:r]
        if any(weight[r:]):
            return GLCharacter.zero(n, blocks)
        weight = trimmed
    weight = weight + (0,) * (r - len(weight))
    shift = weight[-1] if r else 0
    base = tuple(w - shift for w in weight)
    if any(base[i] < base[i + 1] for i in range(len(base) - 1)):
        raise DomainError(f"weight {weight} is not dominant")
    det = tuple(sum(l[i] for l in letters) * shift for i in range(n)) if r else (0,) * n
    terms: Dict[Monomial, int] = {}
    for content, count in _ssyt_contents(Partition(base).parts, r).items():
        m = list(det)
        for letter, times in enumerate(content):
            if times:
                vec = letters[letter]
                for i in range(n):
                    m[i] += times * vec[i]
        m = tuple(m)
        terms[m] = terms.get(m, 0) + count
    return GLCharacter(n, terms, blocks)


@lru_cache(maxsize=None)
def _ssyt_contents(shape: Tuple[int, ...], r: int) -> Dict[Tuple[int, ...], int]:
    """Contents of semistandard tableaux of the shape with entries in 0..r-1."""
    if not shape:
        return {(0,) * r: 1}
    if len(shape) > r:
        return {}
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * r
    out: Dict[Tuple[int, ...], int] = {}

    def place(index: int):
        if index == len(cells):
            key = tuple(counts)
            out[key] = out.get(key, 0) + 1
            return
        i, j = cells[index]
        lower = 0
        left = filling.get((i, j - 1))
        if left is not None:
            lower = left
        above = filling.get((i - 1, j))
        if above is not None:
            lower = max(lower, above + 1)
        below = sum(1 for k in range(i + 1, len(shape)) if shape[k] > j)
        upper = r - 1 - below
        for v in range(lower, upper + 1):
            filling[(i, j)] = v
            counts[v] += 1
            place(index + 1)
            counts[v] -= 1
            del filling[(i, j)]

    place(0)
    return out


def block_schur_character(weight: Monomial, blocks: Sequence[int]) -> GLCharacter:
    """Irreducible character of prod GL_b with a blockwise dominant highest weight."""
    n = sum(blocks)
    result = GLCharacter.trivial(n, blocks=blocks)
    start = 0
    for b in blocks:
        letters = [tuple(1 if i == start + a else 0 for i in range(n)) for a in range(b)]
        result = result * schur_character(weight[start:start + b], letters, n, blocks)
        start += b
    return result


def schur_decompose(chi: GLCharacter, max_dim: int = None) -> List[Tuple[Monomial, int]]:
    """Multiplicities of the irreducible constituents, peeling off leading weights."""
    if not chi.is_symmetric():
        raise DomainError("character is not symmetric under the block Weyl group")
    _require_effective(chi)
    if max_dim is not None and sum(abs(c) for _, c in chi.items()) > max_dim:
        raise DomainError(f"character dimension exceeds the bound {max_dim}")
    out: List[Tuple[Monomial, int]] = []
    remaining = chi
    while not remaining.is_zero():
        lead, mult = remaining.items()[0]
        if mult < 0:
            raise DomainError(f"negative multiplicity {mult} at {lead}, the character is not polynomial")
        if not chi.is_dominant(lead):
            raise DomainError(f"leading weight {lead} is not dominant")
        out.append((lead, mult))
        remaining = remaining - block_schur_character(lead, chi.blocks).scale(mult)
    return out
