import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.errors import ConfigError, DomainError
from src.symfun.characters import GLCharacter

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class FlagType:
    """Partial flags in C^n with successive quotient ranks `blocks`."""

    blocks: Tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if len(blocks) < 2 or any(b <= 0 for b in blocks):
            raise DomainError(f"invalid flag blocks {blocks}")
        object.__setattr__(self, 'blocks', blocks)

    @classmethod
    def grassmannian(cls, k: int, n: int) -> 'FlagType':
        return cls((k, n - k))

    @classmethod
    def projective(cls, n: int) -> 'FlagType':
        return cls((1, n))

    @classmethod
    def from_dims(cls, dims: Sequence[int], n: int) -> 'FlagType':
        edges = (0,) + tuple(dims) + (n,)
        return cls(tuple(b - a for a, b in zip(edges, edges[1:])))

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def dim(self) -> int:
        return (self.n ** 2 - sum(b * b for b in self.blocks)) // 2

    @property
    def rho(self) -> Weight:
        return tuple(range(self.n, 0, -1))

    @property
    def name(self) -> str:
        if self.blocks[0] == 1 and len(self.blocks) == 2:
            return f"P{self.n - 1}"
        if len(self.blocks) == 2:
            return f"Gr({self.blocks[0]},{self.n})"
        dims, running = [], 0
        for b in self.blocks[:-1]:
            running += b
            dims.append(str(running))
        return f"Fl({','.join(dims)};{self.n})"


@dataclass(frozen=True)
class FlagVariety:
    factors: Tuple[FlagType, ...]

    @classmethod
    def single(cls, flag: FlagType) -> 'FlagVariety':
        return cls((flag,))

    @property
    def n(self) -> int:
        return sum(f.n for f in self.factors)

    @property
    def blocks(self) -> Tuple[int, ...]:
        return tuple(b for f in self.factors for b in f.blocks)

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @property
    def name(self) -> str:
        return " x ".join(f.name for f in self.factors)

    def offsets(self) -> List[int]:
        out, start = [], 0
        for f in self.factors:
            out.append(start)
            start += f.n
        return out

    def split(self, weight: Weight) -> List[Weight]:
        if len(weight) != self.n:
            raise DomainError(f"weight {weight} has {len(weight)} entries, expected {self.n}")
        return [tuple(weight[o:o + f.n]) for o, f in zip(self.offsets(), self.factors)]

    def zero_character(self) -> GLCharacter:
        return GLCharacter.zero(self.n, self.blocks)

    def trivial_character(self, n: int = 1) -> GLCharacter:
        return GLCharacter.trivial(self.n, n, self.blocks)

    def _block_range(self, factor: int, block: int) -> range:
        start = self.offsets()[factor] + sum(self.factors[factor].blocks[:block])
        return range(start, start + self.factors[factor].blocks[block])

    def _unit(self, i: int, sign: int) -> Weight:
        return tuple(sign if j == i else 0 for j in range(self.n))

    def block_character(self, factor: int, block: int, dual: bool = False) -> GLCharacter:
        """Character of G_block on the factor; `dual` gives G_block^*."""
        sign = 1 if dual else -1
        return GLCharacter.from_weights(self.n, [self._unit(i, sign) for i in self._block_range(factor, block)],
                                        self.blocks)

    def tautological(self, name: str) -> GLCharacter:
        match = re.fullmatch(r"([UQG])(\d*)", name)
        if not match:
            raise DomainError(f"{self.name} has no tautological bundle named {name}")
        letter, digits = match.groups()
        if letter == 'G':
            if not digits:
                raise DomainError("G needs a block index")
            factor, block = 0, int(digits) - 1
            if len(self.factors) != 1:
                raise DomainError("G<i> names are only available on a single flag")
        else:
            if len(self.factors) == 1 and not digits:
                factor = 0
            elif digits and 1 <= int(digits) <= len(self.factors):
                factor = int(digits) - 1
            else:
                raise DomainError(f"{self.name} has no tautological bundle named {name}")
            blocks = self.factors[factor].blocks
            if len(blocks) != 2:
                raise DomainError(f"{name} is ambiguous on {self.factors[factor].name}")
            block = 0 if letter == 'U' else 1
        if not 0 <= block < len(self.factors[factor].blocks):
            raise DomainError(f"{self.name} has no tautological bundle named {name}")
        return self.block_character(factor, block)

    def line(self, degrees: Sequence[int]) -> GLCharacter:
        degrees = tuple(degrees)
        if len(degrees) != len(self.factors):
            raise DomainError(f"{self.name} expects {len(self.factors)} line degrees, got {degrees}")
        vec = [0] * self.n
        for f, a in enumerate(degrees):
            for i in self._block_range(f, 0):
                vec[i] = a
        return GLCharacter(self.n, {tuple(vec): 1}, self.blocks)

    def cotangent(self) -> GLCharacter:
        total = self.zero_character()
        for f, flag in enumerate(self.factors):
            m = len(flag.blocks)
            for i in range(m):
                for j in range(i + 1, m):
                    total = total + self.block_character(f, i) * self.block_character(f, j, dual=True)
        return total

    def canonical_weight(self) -> Weight:
        vec = [0] * self.n
        omega = self.cotangent()
        for m, c in omega.items():
            for i, a in enumerate(m):
                vec[i] += a * c
        return tuple(vec)


_FACTOR = re.compile(r"\s*(?:P\^?(\d+)|Gr\((\d+),(\d+)\)|Fl\(([\d,]+);(\d+)\))\s*")


def parse_flag(text: str) -> FlagVariety:
    factors = []
    for chunk in re.split(r"\s*x\s*", text.strip()):
        match = _FACTOR.fullmatch(chunk)
        if not match:
            raise ConfigError(f"cannot parse flag variety {chunk!r}", 1, text.find(chunk) + 1)
        p, k, n, dims, m = match.groups()
        if p is not None:
            factors.append(FlagType.projective(int(p)))
        elif k is not None:
            factors.append(FlagType.grassmannian(int(k), int(n)))
        else:
            factors.append(FlagType.from_dims([int(d) for d in dims.split(',')], int(m)))
    return FlagVariety(tuple(factors))


def parse_weight(text: str, flag: FlagVariety) -> Weight:
    entries = [int(x) for x in re.split(r"[,|;\s]+", text.strip()) if x]
    if len(entries) != flag.n:
        raise ConfigError(f"weight needs {flag.n} entries, got {len(entries)}", 1, 1)
    return tuple(entries)
