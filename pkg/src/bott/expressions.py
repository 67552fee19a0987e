import re
from dataclasses import dataclass
from typing import List, Tuple

from src.errors import ConfigError, DomainError
from src.sheaves.sheaf_class import SheafClass
from src.symfun.characters import (GLCharacter, schur_character, sym_of_character,
                                   wedge_of_character)
from src.symfun.partitions import Partition


class BundleExpr:
    """Expression tree for bundles built from tautological ones.

    The same tree evaluates to a Chern-character class on a variety (`to_sheaf`)
    and to a Levi character on a flag variety (`to_character`).
    """

    def to_sheaf(self, variety) -> SheafClass:
        raise NotImplementedError

    def to_character(self, flag) -> GLCharacter:
        raise NotImplementedError

    def summands(self) -> List['BundleExpr']:
        return [self]

    def __add__(self, other: 'BundleExpr') -> 'BundleExpr':
        return Sum(tuple(self.summands()) + tuple(other.summands()))


@dataclass(frozen=True, eq=True)
class Trivial(BundleExpr):
    def to_sheaf(self, variety):
        return variety.trivial(1)

    def to_character(self, flag):
        return flag.trivial_character()

    def __str__(self):
        return "O"


@dataclass(frozen=True, eq=True)
class Line(BundleExpr):
    degrees: Tuple[int, ...]

    def to_sheaf(self, variety):
        return variety.line(self.degrees)

    def to_character(self, flag):
        return flag.line(self.degrees)

    def __str__(self):
        return f"O({','.join(str(d) for d in self.degrees)})"


@dataclass(frozen=True, eq=True)
class Taut(BundleExpr):
    name: str

    def to_sheaf(self, variety):
        return variety.sheaf(self.name)

    def to_character(self, flag):
        return flag.tautological(self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=True)
class Dual(BundleExpr):
    inner: BundleExpr

    def to_sheaf(self, variety):
        return self.inner.to_sheaf(variety).dual()

    def to_character(self, flag):
        return self.inner.to_character(flag).dual()

    def __str__(self):
        return f"dual({self.inner})"


@dataclass(frozen=True, eq=True)
class Det(BundleExpr):
    inner: BundleExpr

    def to_sheaf(self, variety):
        return self.inner.to_sheaf(variety).det()

    def to_character(self, flag):
        chi = self.inner.to_character(flag)
        vec = [0] * chi.n
        for m, c in chi.items():
            if c < 0:
                raise DomainError("det of a virtual character")
            for i, a in enumerate(m):
                vec[i] += a * c
        return GLCharacter(chi.n, {tuple(vec): 1}, chi.blocks)

    def __str__(self):
        return f"det({self.inner})"


@dataclass(frozen=True, eq=True)
class Wedge(BundleExpr):
    inner: BundleExpr
    k: int

    def to_sheaf(self, variety):
        return self.inner.to_sheaf(variety).wedge(self.k)

    def to_character(self, flag):
        return wedge_of_character(self.inner.to_character(flag), self.k)

    def __str__(self):
        return f"wedge({self.inner},{self.k})"


@dataclass(frozen=True, eq=True)
class Sym(BundleExpr):
    inner: BundleExpr
    k: int

    def to_sheaf(self, variety):
        return self.inner.to_sheaf(variety).sym(self.k)

    def to_character(self, flag):
        return sym_of_character(self.inner.to_character(flag), self.k)

    def __str__(self):
        return f"sym({self.inner},{self.k})"


@dataclass(frozen=True, eq=True)
class Schur(BundleExpr):
    inner: BundleExpr
    partition: Partition

    def to_sheaf(self, variety):
        return self.inner.to_sheaf(variety).schur(self.partition)

    def to_character(self, flag):
        chi = self.inner.to_character(flag)
        return schur_character(self.partition.parts, chi.weights(), chi.n, chi.blocks)

    def __str__(self):
        return f"schur({self.inner},{','.join(str(p) for p in self.partition.parts)})"


@dataclass(frozen=True, eq=True)
class Tensor(BundleExpr):
    factors: Tuple[BundleExpr, ...]

    def to_sheaf(self, variety):
        result = self.factors[0].to_sheaf(variety)
        for f in self.factors[1:]:
            result = result * f.to_sheaf(variety)
        return result

    def to_character(self, flag):
        result = self.factors[0].to_character(flag)
        for f in self.factors[1:]:
            result = result * f.to_character(flag)
        return result

    def __str__(self):
        return f"tensor({','.join(str(f) for f in self.factors)})"


@dataclass(frozen=True, eq=True)
class Multiple(BundleExpr):
    count: int
    inner: BundleExpr

    def to_sheaf(self, variety):
        return self.inner.to_sheaf(variety) * self.count

    def to_character(self, flag):
        return self.inner.to_character(flag).scale(self.count)

    def summands(self):
        return [self.inner] * self.count

    def __str__(self):
        return f"{self.count}*{self.inner}"


@dataclass(frozen=True, eq=True)
class Sum(BundleExpr):
    terms: Tuple[BundleExpr, ...]

    def to_sheaf(self, variety):
        result = self.terms[0].to_sheaf(variety)
        for t in self.terms[1:]:
            result = result + t.to_sheaf(variety)
        return result

    def to_character(self, flag):
        result = self.terms[0].to_character(flag)
        for t in self.terms[1:]:
            result = result + t.to_character(flag)
        return result

    def summands(self):
        out = []
        for t in self.terms:
            out.extend(t.summands())
        return out

    def __str__(self):
        return "+".join(str(t) for t in self.terms)


_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[+*(),]))")
_FUNCTIONS = {'dual', 'det', 'wedge', 'sym', 'schur', 'tensor'}


class _Parser:
    def __init__(self, text: str, line: int = 1, column: int = 1):
        self.text = text
        self.line = line
        self.column = column
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            match = _TOKEN.match(text, pos)
            if not match:
                self.fail("unexpected character", pos)
            kind = match.lastgroup
            self.tokens.append((kind, match.group(kind), match.start(kind)))
            pos = match.end()
        self.index = 0

    def fail(self, message: str, offset: int = None):
        if offset is None:
            offset = self.tokens[self.index][2] if self.index < len(self.tokens) else len(self.text)
        raise ConfigError(f"{message} in bundle expression {self.text!r}", self.line, self.column + offset)

    def peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else (None, None, len(self.text))

    def take(self, kind: str = None, value: str = None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            self.fail(f"expected {value or kind}")
        self.index += 1
        return tok

    def parse(self) -> BundleExpr:
        expr = self.expression()
        if self.peek()[0] is not None:
            self.fail("trailing input")
        return expr

    def expression(self) -> BundleExpr:
        terms = [self.term()]
        while self.peek()[1] == '+':
            self.take('op', '+')
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> BundleExpr:
        count = None
        if self.peek()[0] == 'int':
            count = int(self.take('int')[1])
            if count < 0:
                self.fail("negative multiplicity")
            if self.peek()[1] == '*':
                self.take('op', '*')
        factor = self.factor()
        return factor if count is None else Multiple(count, factor)

    def integers(self) -> Tuple[int, ...]:
        values = [int(self.take('int')[1])]
        while self.peek()[1] == ',':
            self.take('op', ',')
            values.append(int(self.take('int')[1]))
        return tuple(values)

    def factor(self) -> BundleExpr:
        kind, value, offset = self.peek()
        if kind != 'name':
            self.fail("expected a bundle")
        self.take('name')
        if value == 'O':
            if self.peek()[1] == '(':
                self.take('op', '(')
                degrees = self.integers()
                self.take('op', ')')
                return Line(degrees)
            return Trivial()
        if value in _FUNCTIONS:
            self.take('op', '(')
            if value == 'tensor':
                parts = [self.expression()]
                while self.peek()[1] == ',':
                    self.take('op', ',')
                    parts.append(self.expression())
                self.take('op', ')')
                return Tensor(tuple(parts))
            inner = self.expression()
            if value in ('dual', 'det'):
                self.take('op', ')')
                return Dual(inner) if value == 'dual' else Det(inner)
            self.take('op', ',')
            numbers = self.integers()
            self.take('op', ')')
            if value == 'schur':
                return Schur(inner, Partition(numbers))
            if len(numbers) != 1 or numbers[0] < 0:
                self.fail(f"{value} needs one non-negative integer")
            return Wedge(inner, numbers[0]) if value == 'wedge' else Sym(inner, numbers[0])
        if self.peek()[1] == '(':
            self.fail(f"unknown function {value}", offset)
        return Taut(value)


def parse_bundle(text: str, line: int = 1, column: int = 1) -> BundleExpr:
    if not text or not text.strip():
        raise ConfigError("empty bundle expression", line, column)
    try:
        return _Parser(text, line, column).parse()
    except DomainError as exc:
        raise ConfigError(str(exc), line, column) from exc
