from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import ring as poly_ring

from src.errors import DomainError
from src.utils.exact import to_fraction

Exponents = Tuple[int, ...]


class ChowRing:
    """Graded polynomial ring truncated above `dim`.

    `bounds` holds (prefix, max_degree) pairs: the part of a monomial in the first
    `prefix` generators may not exceed `max_degree`. Towers of bundles append
    generators, so a base ring is always a prefix of the rings built over it.
    """

    def __init__(self, names: Sequence[str], degrees: Sequence[int], dim: int,
                 bounds: Iterable[Tuple[int, int]] = ()):
        if len(names) != len(degrees):
            raise DomainError("generator names and degrees differ in length")
        if not names:
            raise DomainError("a Chow ring needs at least one generator")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.dim = dim
        self.bounds = tuple((p, d) for p, d in bounds if p > 0)
        self.poly_ring, *self.gens = poly_ring(list(self.names), QQ)
        self._index = {name: i for i, name in enumerate(self.names)}

    def __repr__(self):
        return f"ChowRing({', '.join(self.names)}; dim={self.dim})"

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        if name not in self._index:
            raise DomainError(f"unknown generator {name}")
        return self._index[name]

    def fresh_name(self, stem: str) -> str:
        if stem not in self._index:
            return stem
        k = 2
        while f"{stem}{k}" in self._index:
            k += 1
        return f"{stem}{k}"

    def monomial_degree(self, monom: Exponents) -> int:
        return sum(e * d for e, d in zip(monom, self.degrees))

    def admissible(self, monom: Exponents) -> bool:
        if self.monomial_degree(monom) > self.dim:
            return False
        for prefix, max_degree in self.bounds:
            if sum(e * d for e, d in zip(monom[:prefix], self.degrees[:prefix])) > max_degree:
                return False
        return True

    def clip(self, poly):
        if all(self.admissible(m) for m in poly.keys()):
            return poly
        return self.poly_ring.from_dict({m: c for m, c in poly.items() if self.admissible(m)})

    def ground(self, value):
        if isinstance(value, int):
            return QQ(value)
        if isinstance(value, Fraction):
            return QQ(value.numerator, value.denominator)
        if isinstance(value, sympy.Basic):
            return QQ.from_sympy(value)
        return QQ.convert(value)

    def zero(self) -> 'GradedClass':
        return GradedClass(self, self.poly_ring.zero)

    def one(self) -> 'GradedClass':
        return GradedClass(self, self.poly_ring.one)

    def scalar(self, value) -> 'GradedClass':
        return GradedClass(self, self.poly_ring.one * self.ground(value))

    def gen(self, name: str) -> 'GradedClass':
        return GradedClass(self, self.gens[self.index(name)])

    def monomial(self, exponents: Exponents, coefficient=1) -> 'GradedClass':
        return GradedClass(self, self.poly_ring.from_dict({tuple(exponents): self.ground(coefficient)}))

    def from_expr(self, expr) -> 'GradedClass':
        expr = sympy.sympify(expr)
        unknown = {str(s) for s in expr.free_symbols} - set(self.names)
        if unknown:
            raise DomainError(f"unknown symbols {sorted(unknown)} for {self}")
        return GradedClass(self, self.clip(self.poly_ring.from_expr(expr)))

    def is_prefix_of(self, other: 'ChowRing') -> bool:
        return other.names[:self.ngens] == self.names

    def lift(self, cls: 'GradedClass') -> 'GradedClass':
        """Pull a class back from a ring this ring was built over."""
        if cls.ring is self:
            return cls
        source = cls.ring
        if not source.is_prefix_of(self):
            raise DomainError(f"cannot lift from {source} to {self}")
        pad = (0,) * (self.ngens - source.ngens)
        poly = self.poly_ring.from_dict({m + pad: c for m, c in cls.poly.items()})
        return GradedClass(self, self.clip(poly))

    def embed(self, cls: 'GradedClass', positions: Sequence[int]) -> 'GradedClass':
        """Map generator i of the source ring to generator positions[i] of this ring."""
        terms = {}
        for m, c in cls.poly.items():
            target = [0] * self.ngens
            for i, e in enumerate(m):
                target[positions[i]] += e
            terms[tuple(target)] = c
        return GradedClass(self, self.clip(self.poly_ring.from_dict(terms)))

    def descend(self, cls: 'GradedClass', base: 'ChowRing') -> 'GradedClass':
        """Read a class free of the trailing generators as a class of the base ring."""
        keep = base.ngens
        terms = {}
        for m, c in cls.poly.items():
            if any(m[keep:]):
                raise DomainError("class still involves relative generators")
            terms[m[:keep]] = c
        return GradedClass(base, base.clip(base.poly_ring.from_dict(terms)))

    def monomials_of_degree(self, degree: int) -> Iterator[Exponents]:
        def extend(i: int, remaining: int, prefix: Tuple[int, ...]):
            if i == self.ngens:
                if remaining == 0 and self.admissible(prefix):
                    yield prefix
                return
            d = self.degrees[i]
            for e in range(remaining // d + 1):
                yield from extend(i + 1, remaining - e * d, prefix + (e,))

        yield from extend(0, degree, ())


class GradedClass:
    __slots__ = ('ring', 'poly', '_components')

    def __init__(self, ring: ChowRing, poly):
        self.ring = ring
        self.poly = poly
        self._components: Optional[Dict[int, object]] = None

    @property
    def components(self) -> Dict[int, object]:
        if self._components is None:
            buckets: Dict[int, dict] = {}
            for m, c in self.poly.items():
                buckets.setdefault(self.ring.monomial_degree(m), {})[m] = c
            self._components = {d: self.ring.poly_ring.from_dict(t) for d, t in buckets.items()}
        return self._components

    def _coerce(self, other) -> 'GradedClass':
        if isinstance(other, GradedClass):
            if other.ring is not self.ring:
                if other.ring.is_prefix_of(self.ring):
                    return self.ring.lift(other)
                if self.ring.is_prefix_of(other.ring):
                    raise _Promote(other.ring)
                raise DomainError(f"classes live in unrelated rings {self.ring} and {other.ring}")
            return other
        return self.ring.scalar(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except _Promote as p:
            return p.ring.lift(self) + other
        return GradedClass(self.ring, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except _Promote as p:
            return p.ring.lift(self) - other
        return GradedClass(self.ring, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GradedClass(self.ring, -self.poly)

    def __mul__(self, other):
        if not isinstance(other, GradedClass):
            return GradedClass(self.ring, self.poly * self.ring.ground(other))
        try:
            other = self._coerce(other)
        except _Promote as p:
            return p.ring.lift(self) * other
        ring = self.ring
        result = ring.poly_ring.zero
        for da, pa in self.components.items():
            for db, pb in other.components.items():
                if da + db <= ring.dim:
                    result = result + pa * pb
        return GradedClass(ring, ring.clip(result))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / to_fraction(scalar))

    def __pow__(self, n: int):
        result = self.ring.one()
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, GradedClass):
            try:
                other = self._coerce(other)
            except _Promote as p:
                return p.ring.lift(self) == other
            return self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == self.ring.scalar(other).poly
        return NotImplemented

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.poly

    def part(self, degree: int) -> 'GradedClass':
        comp = self.components.get(degree)
        if comp is None:
            return self.ring.zero()
        return GradedClass(self.ring, comp)

    def truncate(self, degree: int) -> 'GradedClass':
        poly = self.ring.poly_ring.zero
        for d, comp in self.components.items():
            if d <= degree:
                poly = poly + comp
        return GradedClass(self.ring, poly)

    def without_constant(self) -> 'GradedClass':
        return self - self.part(0)

    def constant(self) -> Fraction:
        return self.coefficient((0,) * self.ring.ngens)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(self.components))

    def coefficient(self, exponents: Exponents) -> Fraction:
        c = self.poly.get(tuple(exponents))
        if c is None:
            return Fraction(0)
        return to_fraction(c)

    def terms(self) -> Iterator[Tuple[Exponents, Fraction]]:
        for m, c in sorted(self.poly.items(), reverse=True):
            yield m, to_fraction(c)

    def scale_degrees(self, factor) -> 'GradedClass':
        """Multiply the degree-d component by factor**d."""
        poly = self.ring.poly_ring.zero
        for d, comp in self.components.items():
            poly = poly + comp * self.ring.ground(to_fraction(factor) ** d)
        return GradedClass(self.ring, poly)

    def to_expr(self) -> sympy.Expr:
        return self.poly.as_expr()

    def __str__(self):
        return str(self.to_expr()) if self.poly else "0"

    def __repr__(self):
        return f"GradedClass({self})"

    def exp(self) -> 'GradedClass':
        """Truncated exponential of a class without constant term."""
        if self.constant() != 0:
            raise DomainError("exp needs a class without constant term")
        result = self.ring.one()
        term = self.ring.one()
        for n in range(1, self.ring.dim + 1):
            term = term * self * Fraction(1, n)
            if term.is_zero():
                break
            result = result + term
        return result

    def log(self) -> 'GradedClass':
        """Truncated logarithm of a class with constant term 1."""
        if self.constant() != 1:
            raise DomainError("log needs a class with constant term 1")
        y = self - 1
        result = self.ring.zero()
        power = self.ring.one()
        for n in range(1, self.ring.dim + 1):
            power = power * y
            if power.is_zero():
                break
            result = result + power * Fraction((-1) ** (n - 1), n)
        return result

    def inverse(self) -> 'GradedClass':
        c0 = self.constant()
        if c0 == 0:
            raise DomainError("class is not invertible")
        y = self * (1 / c0) - 1
        result = self.ring.one()
        power = self.ring.one()
        for n in range(1, self.ring.dim + 1):
            power = power * (-y)
            if power.is_zero():
                break
            result = result + power
        return result * (1 / c0)

    def substitute(self, images: Dict[int, 'GradedClass'], target: ChowRing) -> 'GradedClass':
        """Evaluate this polynomial with generator i replaced by images[i]."""
        powers: Dict[Tuple[int, int], GradedClass] = {}

        def power(i: int, e: int) -> 'GradedClass':
            key = (i, e)
            if key not in powers:
                powers[key] = target.one() if e == 0 else power(i, e - 1) * images[i]
            return powers[key]

        result = target.zero()
        for m, c in self.poly.items():
            term = target.scalar(to_fraction(c))
            for i, e in enumerate(m):
                if e:
                    if images.get(i) is None or images[i].is_zero():
                        term = None
                        break
                    term = term * power(i, e)
            if term is not None:
                result = result + term
        return result


class _Promote(Exception):
    def __init__(self, ring: ChowRing):
        super().__init__()
        self.ring = ring
