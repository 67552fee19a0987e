from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from src.bott.expressions import BundleExpr, parse_bundle
from src.chow.graded import GradedClass
from src.chow.varieties import FlagBundle, Variety, flag_bundle, zero_locus
from src.errors import ConsistencyError, DomainError
from src.loci.ambient import Ambient, AmbientSpec
from src.loci.reports import (DIMENSION_CHECK, GENERAL_SECTION, INTEGRALITY_CHECK, KODAIRA_VANISHING, Classification,
                              LocusReport)
from src.loci.tables import FOURFOLDS, ORBIT_ROWS, OrbitRow
from src.sheaves.operations import adjoint_sl
from src.sheaves.sheaf_class import SheafClass
from src.symfun.partitions import Partition, partitions_of
from src.utils.exact import to_fraction
from src.utils.log import get_logger

logger = get_logger('nilpotent')

TORSION_NOTE = "ad(E) is taken as E (x) E^* - O; determinant 2-torsion is ignored"
DOUBLE_COVER_NOTE = "the collapsing has degree 2: the zero locus upstairs is a double cover of the locus"
SINGULAR_NOTE = "Sing of the locus is the degeneracy locus of the boundary of the orbit closure"


def orbit_dimension(partition: Partition) -> int:
    """Dimension of the nilpotent orbit of sl_e with Jordan type `partition`."""
    e = partition.size
    return e * e - sum(p * p for p in partition.conjugate())


def orbit_codimension(partition: Partition) -> int:
    """Codimension of the orbit closure in sl_e."""
    e = partition.size
    return e * e - 1 - orbit_dimension(partition)


def dominates(first: Partition, second: Partition) -> bool:
    total_a = total_b = 0
    for i in range(max(len(first), len(second))):
        total_a += first[i]
        total_b += second[i]
        if total_a < total_b:
            return False
    return True


def singular_codimension(partition: Partition) -> Optional[int]:
    """Codimension of the boundary inside the orbit closure; None for the zero orbit."""
    below = [p for p in partitions_of(partition.size) if p != partition and dominates(partition, p)]
    if not below:
        return None
    return orbit_dimension(partition) - max(orbit_dimension(p) for p in below)


def flag_dims_of(partition: Partition) -> Tuple[int, ...]:
    """Flag type whose cotangent collapsing has image the closure of the orbit of `partition`.

    Block sizes are the parts of the conjugate partition in increasing order; any other
    order gives a different resolution of the same closure.
    """
    sizes = sorted(partition.conjugate())
    dims, total = [], 0
    for s in sizes[:-1]:
        total += s
        dims.append(total)
    return tuple(dims)


def partition_of_flag(dims: Sequence[int], rank: int) -> Partition:
    sizes = [b - a for a, b in zip((0,) + tuple(dims), tuple(dims) + (rank,))]
    return Partition(tuple(sorted(sizes, reverse=True))).conjugate()


def flag_dimension(dims: Sequence[int], rank: int) -> int:
    sizes = [b - a for a, b in zip((0,) + tuple(dims), tuple(dims) + (rank,))]
    return (rank * rank - sum(s * s for s in sizes)) // 2


@dataclass(frozen=True)
class RichardsonOrbit:
    id: int
    group: str
    space: str
    dim_gp: int
    ell_p: int
    codim_sing: int
    delta: int
    group_dim: int
    rank: Optional[int] = None
    flag_dims: Optional[Tuple[int, ...]] = None

    @property
    def dim_p(self) -> int:
        return self.group_dim - self.dim_gp

    @property
    def computable(self) -> bool:
        return self.flag_dims is not None

    @property
    def birational(self) -> bool:
        return self.delta == 1

    @property
    def levi_excess(self) -> int:
        """2 dim P - dim G, which is the codimension of the orbit closure."""
        return 2 * self.dim_p - self.group_dim

    def partition(self) -> Partition:
        if not self.computable:
            raise DomainError(f"orbit ({self.id}) of {self.group} has no type A flag description")
        return partition_of_flag(self.flag_dims, self.rank)

    def describe(self) -> str:
        return f"({self.id}) {self.space}, {self.group}"


def _orbit_from_row(row: OrbitRow) -> RichardsonOrbit:
    return RichardsonOrbit(row.id, row.group, row.space, row.dim_gp, row.ell_p, row.codim_sing, row.delta,
                           row.group_dim, row.rank, row.flag_dims)


def orbit_catalog() -> List[RichardsonOrbit]:
    orbits = [_orbit_from_row(row) for row in ORBIT_ROWS]
    for orbit in orbits:
        if orbit.levi_excess != orbit.ell_p:
            raise ConsistencyError(f"orbit ({orbit.id}): 2 dim P - dim G = {orbit.levi_excess}, "
                                   f"stored {orbit.ell_p}")
    return orbits


def orbit_by_id(orbit_id: int) -> RichardsonOrbit:
    for orbit in orbit_catalog():
        if orbit.id == orbit_id:
            return orbit
    raise DomainError(f"no Richardson orbit with id {orbit_id}")


@dataclass
class Feasibility:
    orbit: int
    target_dim: int
    target: str
    possible: bool
    ambient_dim: int
    index: int
    ambient: Optional[str] = None
    reason: str = ""

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def feasibility(orbit: RichardsonOrbit, d: int, target: str = 'cy') -> Feasibility:
    """Which ambient X can carry a locus of dimension d with trivial (or Fano) canonical class.

    X must have dimension d + l_P and index dim P (dim P + 1 for a Fano locus).
    """
    if target not in ('cy', 'fano'):
        raise DomainError(f"unknown target {target!r}; expected 'cy' or 'fano'")
    dim_x = d + orbit.ell_p
    index = orbit.dim_p + (1 if target == 'fano' else 0)
    result = Feasibility(orbit.id, d, target, True, dim_x, index)
    if index > dim_x + 1:
        result.possible = False
        result.reason = f"index {index} exceeds dim X + 1 = {dim_x + 1}"
    elif index == dim_x + 1:
        result.ambient = f"P^{dim_x}"
        result.reason = "index dim X + 1 forces a projective space"
    elif index == dim_x:
        result.ambient = f"Q^{dim_x}"
        result.reason = "index dim X forces a quadric"
    else:
        result.reason = f"Fano of coindex {dim_x + 1 - index} and index {index}"
    return result


@dataclass
class NilpotentLocusConfig:
    """Bundle E of rank e and a line bundle L; the orbit is a catalog id or a partition of e."""

    ambient: AmbientSpec
    bundle: str
    twist: str = "O"
    orbit: Optional[int] = None
    partition: Optional[Tuple[int, ...]] = None
    label: str = ""

    def expression(self) -> BundleExpr:
        return parse_bundle(self.bundle)

    def describe(self) -> str:
        which = f"orbit ({self.orbit})" if self.orbit is not None else f"partition {self.partition}"
        return f"{which}, E = {self.bundle}, L = {self.twist} on {self.ambient.describe()}"


class NilpotentLocus:
    def __init__(self, cfg: NilpotentLocusConfig, ambient: Ambient = None):
        self.cfg = cfg
        self.ambient = ambient or cfg.ambient.build()
        self.variety: Variety = self.ambient.variety
        self.bundle = cfg.expression().to_sheaf(self.variety).lift(self.variety.ring)
        self.line = parse_bundle(cfg.twist).to_sheaf(self.variety).lift(self.variety.ring)
        if self.line.rank != 1:
            raise DomainError(f"L must be a line bundle, got rank {self.line.rank}")
        self.rank = self.bundle.rank
        self.orbit: Optional[RichardsonOrbit] = None
        if cfg.orbit is not None:
            self.orbit = orbit_by_id(cfg.orbit)
            if not self.orbit.computable:
                raise DomainError(f"orbit {self.orbit.describe()} is not of type A")
            if self.orbit.rank != self.rank:
                raise DomainError(f"orbit ({self.orbit.id}) lives in sl_{self.orbit.rank}, "
                                  f"E has rank {self.rank}")
            self.dims = self.orbit.flag_dims
            self.partition = self.orbit.partition()
        elif cfg.partition:
            self.partition = Partition(tuple(cfg.partition))
            if self.partition.size != self.rank:
                raise DomainError(f"partition {self.partition} is not a partition of rank E = {self.rank}")
            self.dims = flag_dims_of(self.partition)
            if not self.dims:
                raise DomainError("the zero orbit has no collapsing")
        else:
            raise DomainError("a nilpotent locus needs an orbit id or a partition")
        self.dim_gp = flag_dimension(self.dims, self.rank)
        self.dim_p = self.rank * self.rank - 1 - self.dim_gp
        self.codimension = orbit_codimension(self.partition)
        self._tower = None
        self.dimension_check: Optional[bool] = None
        self._integrality: List[bool] = []

    @property
    def dim(self) -> int:
        return self.variety.dim - self.codimension

    @property
    def canonical_exponent(self) -> int:
        """The power of L in K_Z = pullback of K_X (x) L^exponent."""
        return self.dim_p

    def anticanonical(self) -> GradedClass:
        return self.variety.tangent.c1() - self.dim_p * self.line.c1()

    def tower(self) -> Tuple[FlagBundle, Variety]:
        """Flag bundle of E over X and the zero locus of (ad E (x) L) / (Omega_rel (x) L)."""
        if self._tower is None:
            space = flag_bundle(self.variety, self.bundle, self.dims)
            ring = space.ring
            line = self.line.lift(ring)
            adjoint = adjoint_sl(self.bundle).lift(ring) * line
            quotient = adjoint - space.sheaf('Trel').dual() * line
            locus = zero_locus(space, quotient, f"resolution of the orbit locus in {space.name}")
            self.dimension_check = locus.dim == self.dim
            if locus.dim != self.dim:
                raise ConsistencyError(f"flag bundle zero locus has dimension {locus.dim}, expected {self.dim}")
            logger.info("built %s of dimension %d over a ring with %d generators",
                        locus.name, locus.dim, len(ring.names))
            self._tower = (space, locus)
        return self._tower

    def classify(self) -> Classification:
        kappa = self.anticanonical()
        diagnostics = []
        if kappa.is_zero():
            return Classification('cy', 0, None, False, diagnostics)
        if self.variety.kind == 'relative':
            diagnostics.append(f"-K = pullback of {kappa}; positivity on a relative ambient is not decided")
            return Classification('violated', None, None, False, diagnostics)
        coefficients = [c for monom, c in kappa.terms() if self.variety.ring.monomial_degree(monom) == 1]
        if not coefficients or any(c <= 0 or c.denominator != 1 for c in coefficients):
            diagnostics.append(f"-K = pullback of {kappa} is not a positive multiple of the polarization")
            return Classification('violated', None, None, False, diagnostics)
        index = reduce(gcd, (int(c) for c in coefficients))
        codim_sing = self.orbit.codim_sing if self.orbit else singular_codimension(self.partition)
        kind = 'fano'
        if codim_sing is not None and codim_sing <= self.dim:
            kind = 'almost-fano'
            diagnostics.append(f"the orbit closure is singular in codimension {codim_sing}: "
                               "-K is nef and big on the resolution")
        return Classification(kind, index, self.dim + 1 - index, False, diagnostics)

    def fundamental_class(self) -> GradedClass:
        space, locus = self.tower()
        return space.pushforward(locus.fundamental_class())

    def _checked(self, value, what: str) -> Fraction:
        value = to_fraction(value)
        self._integrality.append(value.denominator == 1)
        if value.denominator != 1:
            raise ConsistencyError(f"{what} = {value} is not an integer on {self.cfg.describe()}")
        return value

    def invariants(self, forms: Sequence[int] = None) -> LocusReport:
        self._integrality = []
        if self.dim < 0:
            raise DomainError(f"expected dimension {self.dim} is negative for {self.cfg.describe()}")
        classification = self.classify()
        report = LocusReport(
            label=self.cfg.label or self.cfg.describe(),
            ambient=self.ambient.spec.describe(),
            bundle=f"{self.cfg.bundle}, L = {self.cfg.twist}",
            dim=self.dim,
            canonical=f"K = pullback of K_X + {self.dim_p} c1(L)",
            classification=classification,
            method='tower',
        )
        report.note(GENERAL_SECTION)
        report.note(TORSION_NOTE)
        report.note(f"flag dimensions {self.dims} (increasing conjugate blocks of {self.partition})")
        if self.orbit is not None and not self.orbit.birational:
            report.note(DOUBLE_COVER_NOTE)
        report.note(SINGULAR_NOTE)
        space, locus = self.tower()
        fundamental = space.pushforward(locus.fundamental_class())
        report.fundamental_class = str(fundamental)
        report.record(DIMENSION_CHECK, self.dimension_check)
        report.chi_O = self._checked(locus.euler_characteristic(locus.trivial()), "chi(O)")
        if forms is None:
            forms = range(1, self.dim // 2 + 1)
        if forms:
            wedges = locus.cotangent.wedges(max(forms))
            for p in forms:
                report.chi_omega[p] = self._checked(locus.euler_characteristic(wedges[p]), f"chi(Omega^{p})")
        kappa = locus.tangent.c1()
        report.anticanonical_degree = self._checked(locus.integrate(kappa ** self.dim), "(-K)^dim")
        polarization = sum(self.variety.degree_one_classes(), self.variety.ring.zero())
        report.nonempty = self.variety.integrate(fundamental * polarization ** self.dim) != 0
        if classification.kind in ('fano', 'almost-fano'):
            report.h0_anticanonical = self._checked(locus.euler_characteristic(SheafClass.line(kappa)), "chi(-K)")
            report.note(KODAIRA_VANISHING)
        report.record(INTEGRALITY_CHECK, all(self._integrality))
        logger.info("%s: dim %d, chi(O) = %s, (-K)^dim = %s", report.label, self.dim, report.chi_O,
                    report.anticanonical_degree)
        return report


def typeA_invariants(cfg: NilpotentLocusConfig) -> LocusReport:
    return NilpotentLocus(cfg).invariants()


@dataclass
class ModelComparison:
    label: str
    locus: Dict[str, Fraction]
    model: Dict[str, Fraction]
    notes: List[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.locus == self.model


def _complete_intersection(ambient: Ambient, line: SheafClass, degrees: Sequence[int]) -> Variety:
    X = ambient.variety
    normal = X.trivial(0)
    for d in degrees:
        normal = normal + SheafClass.line(d * line.c1())
    return zero_locus(X, normal, f"complete intersection of degrees {list(degrees)} in {X.name}")


def _numbers(variety: Variety, kappa: GradedClass) -> Dict[str, Fraction]:
    return {
        'dim': Fraction(variety.dim),
        'degree': to_fraction(variety.integrate(kappa ** variety.dim)),
        'chi': to_fraction(variety.euler_characteristic(variety.trivial())),
    }


def _compare(label: str, locus: NilpotentLocus, model: Variety) -> ModelComparison:
    _, Z = locus.tower()
    result = ModelComparison(label, _numbers(Z, Z.tangent.c1()), _numbers(model, model.tangent.c1()))
    if not result.agrees:
        raise ConsistencyError(f"{label}: orbit locus gives {result.locus}, model gives {result.model}")
    logger.info("%s: locus and model agree on %s", label, result.locus)
    return result


def full_cone_ci_check(ambient: AmbientSpec, bundle: str, twist: str) -> ModelComparison:
    """The locus of the whole nilpotent cone against the zero locus of L^2, ..., L^e."""
    built = ambient.build()
    cfg = NilpotentLocusConfig(ambient, bundle, twist)
    e = parse_bundle(bundle).to_sheaf(built.variety).rank
    cfg.partition = (e,)
    locus = NilpotentLocus(cfg, built)
    model = _complete_intersection(built, locus.line, range(2, e + 1))
    return _compare(f"full cone of sl_{e} on {ambient.describe()}", locus, model)


def minimal_orbit_ci_check(ambient: AmbientSpec, e: int) -> ModelComparison:
    """E = (e-1) O + O(-1), L = O(1) against (e-2)(e-1) hyperplanes and (e-1) quadrics."""
    if e < 2:
        raise DomainError(f"the minimal orbit needs rank at least 2, got {e}")
    built = ambient.build()
    degree_one = ",".join("-1" for _ in built.variety.degree_one_classes()) or "-1"
    bundle = f"{e - 1}*O+O({degree_one})"
    plus = degree_one.replace("-", "")
    partition = (2,) + (1,) * (e - 2)
    locus = NilpotentLocus(NilpotentLocusConfig(ambient, bundle, f"O({plus})", partition=partition), built)
    model = _complete_intersection(built, locus.line, [1] * ((e - 2) * (e - 1)) + [2] * (e - 1))
    return _compare(f"minimal orbit of sl_{e} on {ambient.describe()}", locus, model)


def fourfold_catalog() -> List[LocusReport]:
    reports = []
    for row in FOURFOLDS:
        cfg = NilpotentLocusConfig(AmbientSpec(row.ambient, list(row.cuts)), row.bundle, row.twist,
                                   orbit=row.orbit, label=row.label)
        reports.append(typeA_invariants(cfg))
    return reports
