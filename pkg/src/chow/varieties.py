from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.chow.graded import ChowRing, GradedClass
from src.errors import ConsistencyError, DomainError
from src.sheaves.sheaf_class import SheafClass
from src.symfun.littlewood_richardson import column_class_integral
from src.utils.exact import to_fraction
from src.utils.log import get_logger

logger = get_logger('chow')


@dataclass
class RelativeExtension:
    base: 'Variety'
    generators: Tuple[str, ...]
    degrees: Tuple[int, ...]
    relation: Optional[GradedClass] = None


class Variety:
    kind = 'absolute'

    def __init__(self, name: str, ring: ChowRing, dim: int):
        if dim < 0:
            raise DomainError(f"{name} would have negative dimension {dim}")
        self.name = name
        self.ring = ring
        self.dim = dim
        self.base: Optional['Variety'] = None
        self._sheaves: Dict[str, SheafClass] = {}
        self._tangent: Optional[SheafClass] = None
        self._todd: Optional[GradedClass] = None

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, dim={self.dim})"

    def register(self, name: str, sheaf: SheafClass):
        self._sheaves[name] = sheaf

    def sheaf_names(self) -> List[str]:
        names = list(self._sheaves)
        if self.base is not None:
            names.extend(n for n in self.base.sheaf_names() if n not in self._sheaves)
        return names

    def sheaf(self, name: str) -> SheafClass:
        if name in self._sheaves:
            return self._sheaves[name]
        if self.base is not None:
            return self.base.sheaf(name).lift(self.ring)
        raise DomainError(f"{self.name} has no tautological bundle named {name}")

    def trivial(self, n: int = 1) -> SheafClass:
        return SheafClass.trivial(self.ring, n)

    def line(self, degrees: Sequence[int]) -> SheafClass:
        return SheafClass.line(self.divisor(degrees))

    def divisor(self, degrees: Sequence[int]) -> GradedClass:
        if self.base is not None:
            return self.ring.lift(self.base.divisor(degrees))
        raise DomainError(f"{self.name} has no polarization")

    def degree_one_classes(self) -> List[GradedClass]:
        if self.base is not None:
            return [self.ring.lift(c) for c in self.base.degree_one_classes()]
        return []

    @property
    def tangent(self) -> SheafClass:
        if self._tangent is None:
            self._tangent = self._build_tangent()
        return self._tangent

    def _build_tangent(self) -> SheafClass:
        raise DomainError(f"{self.name} has no tangent class")

    @property
    def cotangent(self) -> SheafClass:
        return self.tangent.dual()

    def canonical_class(self) -> GradedClass:
        return -self.tangent.c1()

    def todd(self) -> GradedClass:
        if self._todd is None:
            self._todd = self.tangent.todd()
        return self._todd

    def pushforward(self, cls: GradedClass) -> GradedClass:
        raise DomainError(f"{self.name} is not a relative variety")

    def pushforward_to(self, target: 'Variety', cls: GradedClass) -> GradedClass:
        variety = self
        while variety is not target:
            if variety.base is None:
                raise DomainError(f"{target.name} is not below {self.name}")
            cls = variety.pushforward(cls)
            variety = variety.base
        return cls

    def integrate(self, cls: GradedClass) -> Fraction:
        if self.base is None:
            raise DomainError(f"cannot integrate on {self.name}")
        return self.base.integrate(self.pushforward(cls))

    def euler_characteristic(self, sheaf: SheafClass) -> Fraction:
        value = to_fraction(self.integrate(self.ring.lift(sheaf.ch) * self.todd()))
        if value.denominator != 1:
            raise ConsistencyError(f"Riemann-Roch gives the non-integer {value} on {self.name}")
        return value

    def point_class(self) -> GradedClass:
        for monom in self.ring.monomials_of_degree(self.dim):
            cls = self.ring.monomial(monom)
            value = self.integrate(cls)
            if value:
                return cls * (1 / value)
        raise DomainError(f"{self.name} has no class of a point")


class _MonomialVariety(Variety):
    """Absolute variety whose integral is determined on top-degree monomials."""

    def integrate_monomial(self, monom: Tuple[int, ...]) -> Fraction:
        raise NotImplementedError

    def integrate(self, cls: GradedClass) -> Fraction:
        cls = self.ring.lift(cls)
        total = Fraction(0)
        for monom, c in cls.part(self.dim).terms():
            total += c * self.integrate_monomial(monom)
        return total

    def polarization(self) -> GradedClass:
        return GradedClass(self.ring, self.ring.gens[0])

    def divisor(self, degrees: Sequence[int]) -> GradedClass:
        if len(degrees) != 1:
            raise DomainError(f"{self.name} expects a single line bundle degree, got {tuple(degrees)}")
        return self.polarization() * degrees[0]

    def degree_one_classes(self) -> List[GradedClass]:
        return [self.polarization()]


class ProjectiveSpace(_MonomialVariety):
    def __init__(self, n: int, stem: str = 'h'):
        if n < 1:
            raise DomainError("projective space needs n >= 1")
        super().__init__(f"P^{n}", ChowRing([stem], [1], n), n)
        self.n = n
        h = self.polarization()
        self.register('U', SheafClass.line(-h))
        self.register('Q', self.trivial(n + 1) - self.sheaf('U'))

    def integrate_monomial(self, monom):
        return Fraction(1) if monom == (self.n,) else Fraction(0)

    def _build_tangent(self):
        return self.line([1]) * (self.n + 1) - 1


class Grassmannian(_MonomialVariety):
    """Gr(k, n) of k-planes; generators are the Chern classes of U^*."""

    def __init__(self, k: int, n: int, stem: str = 'a'):
        if not 0 < k < n:
            raise DomainError(f"Gr({k},{n}) needs 0 < k < n")
        names = [f"{stem}{i}" for i in range(1, k + 1)]
        ring = ChowRing(names, list(range(1, k + 1)), k * (n - k))
        super().__init__(f"Gr({k},{n})", ring, k * (n - k))
        self.k, self.n = k, n
        chern = ring.one()
        for name in names:
            chern = chern + ring.gen(name)
        dual_u = SheafClass.from_chern(k, chern)
        self.register('U', dual_u.dual())
        self.register('Q', self.trivial(n) - self.sheaf('U'))

    def integrate_monomial(self, monom):
        return Fraction(column_class_integral(tuple(monom), self.k, self.n - self.k))

    def _build_tangent(self):
        return self.sheaf('U').dual() * self.sheaf('Q')


class OddQuadric(_MonomialVariety):
    def __init__(self, n: int, stem: str = 'h'):
        if n < 1 or n % 2 == 0:
            raise DomainError(f"Q^{n}: only odd-dimensional quadrics use a single generator")
        super().__init__(f"Q^{n}", ChowRing([stem], [1], n), n)
        self.n = n
        self.register('U', SheafClass.line(-self.polarization()))

    def integrate_monomial(self, monom):
        return Fraction(2) if monom == (self.n,) else Fraction(0)

    def _build_tangent(self):
        return self.line([1]) * (self.n + 2) - 1 - self.line([2])


class ProductVariety(Variety):
    def __init__(self, factors: Sequence[_MonomialVariety]):
        if len(factors) < 2:
            raise DomainError("a product needs at least two factors")
        for f in factors:
            if not isinstance(f, _MonomialVariety):
                raise DomainError(f"{f.name} cannot be a product factor")
        names, degrees, bounds, positions = [], [], [], []
        running = 0
        for idx, f in enumerate(factors, start=1):
            pos = []
            for name, d in zip(f.ring.names, f.ring.degrees):
                pos.append(len(names))
                names.append(f"{name}_{idx}")
                degrees.append(d)
            positions.append(pos)
            running += f.dim
            bounds.append((len(names), running))
        dim = sum(f.dim for f in factors)
        super().__init__(" x ".join(f.name for f in factors), ChowRing(names, degrees, dim, bounds[:-1]), dim)
        self.factors = tuple(factors)
        self.positions = tuple(tuple(p) for p in positions)
        for idx, f in enumerate(factors, start=1):
            for sheaf_name in f.sheaf_names():
                self.register(f"{sheaf_name}{idx}", self.pullback(idx - 1, f.sheaf(sheaf_name)))

    def pullback(self, index: int, sheaf: SheafClass) -> SheafClass:
        return sheaf.embed(self.ring, self.positions[index])

    def pullback_class(self, index: int, cls: GradedClass) -> GradedClass:
        return self.ring.embed(cls, self.positions[index])

    def divisor(self, degrees: Sequence[int]) -> GradedClass:
        if len(degrees) != len(self.factors):
            raise DomainError(f"{self.name} expects {len(self.factors)} degrees, got {tuple(degrees)}")
        total = self.ring.zero()
        for i, (f, a) in enumerate(zip(self.factors, degrees)):
            if a:
                total = total + self.pullback_class(i, f.polarization()) * a
        return total

    def degree_one_classes(self) -> List[GradedClass]:
        return [self.pullback_class(i, f.polarization()) for i, f in enumerate(self.factors)]

    def _build_tangent(self):
        total = self.trivial(0)
        for i, f in enumerate(self.factors):
            total = total + self.pullback(i, f.tangent)
        return total

    def integrate(self, cls: GradedClass) -> Fraction:
        cls = self.ring.lift(cls)
        total = Fraction(0)
        for monom, c in cls.part(self.dim).terms():
            value = Fraction(1)
            for f, pos in zip(self.factors, self.positions):
                sub = tuple(monom[p] for p in pos)
                if f.ring.monomial_degree(sub) != f.dim:
                    value = Fraction(0)
                    break
                value *= f.integrate_monomial(sub)
            total += c * value
        return total


class GenericBase(Variety):
    """Base with free Chern classes; only pushforwards make sense here."""

    kind = 'generic'

    def __init__(self, dim: int, ranks: Mapping[str, int], lines: Sequence[str] = ()):
        names, degrees, owners = [], [], []
        for sheaf_name, rank in ranks.items():
            stem = sheaf_name.lower()
            for i in range(1, min(rank, dim) + 1):
                names.append(f"{stem}{i}")
                degrees.append(i)
            owners.append((sheaf_name, rank, stem))
        for line_name in lines:
            names.append(line_name.lower())
            degrees.append(1)
        super().__init__(f"generic base of dimension {dim}", ChowRing(names, degrees, dim), dim)
        for sheaf_name, rank, stem in owners:
            chern = self.ring.one()
            for i in range(1, min(rank, dim) + 1):
                chern = chern + self.ring.gen(f"{stem}{i}")
            self.register(sheaf_name, SheafClass.from_chern(rank, chern))
        for line_name in lines:
            self.register(line_name, SheafClass.line(self.ring.gen(line_name.lower())))

    def _build_tangent(self):
        return self.sheaf('T')

    def integrate(self, cls: GradedClass) -> Fraction:
        raise DomainError("integration over a generic base is undefined")


class ZeroLocus(Variety):
    kind = 'zero-locus'

    def __init__(self, ambient: Variety, normal: SheafClass, label: str = None):
        normal = normal.lift(ambient.ring)
        rank = normal.rank
        if rank < 0:
            raise DomainError("zero locus of a class with negative rank")
        name = label or f"Z({ambient.name}; rank {rank})"
        super().__init__(name, ambient.ring, ambient.dim - rank)
        self.base = ambient
        self.ambient = ambient
        self.normal = normal

    def _build_tangent(self):
        return self.ambient.tangent - self.normal

    def fundamental_class(self) -> GradedClass:
        return self.normal.top()

    def pushforward(self, cls: GradedClass) -> GradedClass:
        return self.ring.lift(cls) * self.normal.top()


class ProjectiveBundle(Variety):
    """P(E) of lines in E; H = c_1(O(1)) and O(-1) is the tautological sub-line."""

    kind = 'relative'

    def __init__(self, base: Variety, bundle: SheafClass, stem: str = 'H'):
        bundle = bundle.lift(base.ring)
        r = bundle.rank
        if r < 1:
            raise DomainError("projective bundle of a class with rank < 1")
        b = base.ring
        gen = b.fresh_name(stem)
        ring = ChowRing(b.names + (gen,), b.degrees + (1,), b.dim + r - 1,
                        b.bounds + ((b.ngens, b.dim),))
        super().__init__(f"P({base.name})", ring, base.dim + r - 1)
        self.base = base
        self.bundle = bundle
        self.rank = r
        self.generator = gen
        H = ring.gen(gen)
        self.H = H
        lifted = bundle.lift(ring)
        relation = ring.zero()
        for i in range(r + 1):
            relation = relation + ring.lift(bundle.c(i)) * H ** (r - i)
        self.extension = RelativeExtension(base, (gen,), (1,), relation)
        self.register('Urel', SheafClass.line(-H))
        self.register('Qrel', lifted - self.sheaf('Urel'))
        self.register('Trel', self.sheaf('Urel').dual() * self.sheaf('Qrel'))
        logger.debug("projective bundle over %s: rank %d, %s", base.name, r, ring)
        self._segre = None

    def _build_tangent(self):
        return self.base.tangent.lift(self.ring) + self.sheaf('Trel')

    def degree_one_classes(self) -> List[GradedClass]:
        return super().degree_one_classes() + [self.H]

    def segre_parts(self) -> List[GradedClass]:
        if self._segre is None:
            s = self.bundle.segre()
            self._segre = [s.part(j) for j in range(self.base.ring.dim + 1)]
        return self._segre

    def pushforward(self, cls: GradedClass) -> GradedClass:
        cls = self.ring.lift(cls)
        base = self.base.ring
        h_index = self.ring.ngens - 1
        by_power: Dict[int, dict] = {}
        for m, c in cls.poly.items():
            by_power.setdefault(m[h_index], {})[m[:h_index]] = c
        segre = self.segre_parts()
        total = base.zero()
        for j, terms in by_power.items():
            shift = j - (self.rank - 1)
            if shift < 0 or shift >= len(segre):
                continue
            coefficient = GradedClass(base, base.clip(base.poly_ring.from_dict(terms)))
            total = total + coefficient * segre[shift]
        return total

    def normal_form(self, cls: GradedClass) -> GradedClass:
        """Reduce powers H^j with j >= rank using the defining relation."""
        cls = self.ring.lift(cls)
        r = self.rank
        h_index = self.ring.ngens - 1
        tail = self.extension.relation - self.H ** r
        while True:
            high = {m: c for m, c in cls.poly.items() if m[h_index] >= r}
            if not high:
                return cls
            low = {m: c for m, c in cls.poly.items() if m[h_index] < r}
            reduced = GradedClass(self.ring, self.ring.poly_ring.from_dict(low))
            for m, c in high.items():
                lowered = m[:h_index] + (m[h_index] - r,)
                reduced = reduced - self.ring.monomial(lowered, to_fraction(c)) * tail
            cls = reduced


class GrassmannBundle(Variety):
    """Gr(k, F) realized as a tower of projective bundles of successive sub-lines."""

    kind = 'relative'

    def __init__(self, base: Variety, bundle: SheafClass, k: int):
        bundle = bundle.lift(base.ring)
        r = bundle.rank
        if not 0 < k < r:
            raise DomainError(f"Gr({k}, F) needs 0 < k < rank F = {r}")
        dual_side = k > r - k
        steps = r - k if dual_side else k
        source = bundle.dual() if dual_side else bundle
        levels: List[ProjectiveBundle] = []
        current, quotient = base, source
        lines = []
        for _ in range(steps):
            level = ProjectiveBundle(current, quotient)
            levels.append(level)
            line = level.sheaf('Urel')
            lines.append(line)
            quotient = quotient.lift(level.ring) - line
            current = level
        top = levels[-1]
        sub = top.trivial(0)
        for line in lines:
            sub = sub + line.lift(top.ring)
        if dual_side:
            universal_sub = bundle.lift(top.ring) - sub.dual()
            universal_quotient = sub.dual()
        else:
            universal_sub = sub
            universal_quotient = bundle.lift(top.ring) - sub
        super().__init__(f"Gr({k}, F/{base.name})", top.ring, base.dim + k * (r - k))
        self.base = base
        self.bundle = bundle
        self.k = k
        self.levels = tuple(levels)
        weight = top.ring.one()
        for j, level in enumerate(levels[:-1]):
            weight = weight * top.ring.lift(level.H) ** (steps - 1 - j)
        self.weight = weight
        self.extension = RelativeExtension(base, tuple(l.generator for l in levels),
                                           (1,) * steps, None)
        self.register('Urel', universal_sub)
        self.register('Qrel', universal_quotient)
        self.register('Trel', universal_sub.dual() * universal_quotient)

    def _build_tangent(self):
        return self.base.tangent.lift(self.ring) + self.sheaf('Trel')

    def degree_one_classes(self) -> List[GradedClass]:
        return super().degree_one_classes() + [self.sheaf('Urel').dual().c1()]

    def pushforward(self, cls: GradedClass) -> GradedClass:
        cls = self.ring.lift(cls) * self.weight
        for level in reversed(self.levels):
            cls = level.pushforward(cls)
        return cls


class FlagBundle(Variety):
    """Partial flags of subbundles with the given ranks, as iterated Grassmann bundles."""

    kind = 'relative'

    def __init__(self, base: Variety, bundle: SheafClass, dims: Sequence[int]):
        bundle = bundle.lift(base.ring)
        e = bundle.rank
        dims = tuple(dims)
        if not dims or any(d <= 0 or d >= e for d in dims) or list(dims) != sorted(set(dims)):
            raise DomainError(f"flag dimensions {dims} are invalid for rank {e}")
        steps: List[GrassmannBundle] = []
        current, quotient, previous = base, bundle, 0
        pieces = []
        for d in dims:
            step = GrassmannBundle(current, quotient, d - previous)
            steps.append(step)
            pieces.append(step.sheaf('Urel'))
            quotient = step.sheaf('Qrel')
            current, previous = step, d
        pieces.append(quotient)
        top = steps[-1]
        sizes = [d2 - d1 for d1, d2 in zip((0,) + dims, dims + (e,))]
        reldim = (e * e - sum(s * s for s in sizes)) // 2
        super().__init__(f"Fl{dims}(E/{base.name})", top.ring, base.dim + reldim)
        self.base = base
        self.bundle = bundle
        self.dims = dims
        self.steps = tuple(steps)
        pieces = [p.lift(top.ring) for p in pieces]
        for i, piece in enumerate(pieces, start=1):
            self.register(f"G{i}", piece)
        rel = top.trivial(0)
        for i in range(len(pieces)):
            for j in range(i + 1, len(pieces)):
                rel = rel + pieces[i].dual() * pieces[j]
        self.register('Trel', rel)
        self.extension = RelativeExtension(
            base, tuple(g for s in steps for g in s.extension.generators),
            tuple(d for s in steps for d in s.extension.degrees), None)

    def _build_tangent(self):
        return self.base.tangent.lift(self.ring) + self.sheaf('Trel')

    def degree_one_classes(self) -> List[GradedClass]:
        return self.steps[-1].degree_one_classes()

    def pushforward(self, cls: GradedClass) -> GradedClass:
        for step in reversed(self.steps):
            cls = step.pushforward(cls)
        return cls


def projective_space(n: int) -> ProjectiveSpace:
    return ProjectiveSpace(n)


def grassmannian(k: int, n: int) -> Variety:
    if k == 1:
        space = ProjectiveSpace(n - 1)
        return space
    return Grassmannian(k, n)


def quadric(n: int) -> Variety:
    if n == 4:
        gr = Grassmannian(2, 4)
        gr.name = "Q^4"
        return gr
    if n % 2 == 0:
        raise DomainError(f"even-dimensional quadric Q^{n} is not supported")
    return OddQuadric(n)


def product(*factors: Variety) -> ProductVariety:
    return ProductVariety(factors)


def projective_bundle(base: Variety, bundle: SheafClass) -> ProjectiveBundle:
    return ProjectiveBundle(base, bundle)


def grassmann_bundle(base: Variety, bundle: SheafClass, k: int) -> Variety:
    return GrassmannBundle(base, bundle, k)


def flag_bundle(base: Variety, bundle: SheafClass, dims: Sequence[int]) -> FlagBundle:
    return FlagBundle(base, bundle, dims)


def zero_locus(ambient: Variety, normal: SheafClass, label: str = None) -> ZeroLocus:
    return ZeroLocus(ambient, normal, label)


def generic_base(dim: int, ranks: Mapping[str, int], lines: Sequence[str] = ()) -> GenericBase:
    return GenericBase(dim, ranks, lines)


def integrate(variety: Variety, cls: GradedClass) -> Fraction:
    return variety.integrate(cls)


def euler_characteristic(variety: Variety, sheaf: SheafClass) -> Fraction:
    return variety.euler_characteristic(sheaf)
