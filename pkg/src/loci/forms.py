from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from src.bott.expressions import BundleExpr, Tensor, Trivial, parse_bundle
from src.bott.koszul import SpectralAssembly, intersect, koszul_terms, tighten_with_euler
from src.bott.pushforward import relative_pushforward
from src.chow.graded import GradedClass
from src.chow.varieties import Variety, projective_bundle, zero_locus
from src.errors import ConsistencyError, DomainError
from src.loci.ambient import Ambient, AmbientSpec
from src.loci.reports import (CLASS_CHECK, GENERAL_SECTION, INTEGRALITY_CHECK, KODAIRA_VANISHING, Classification,
                              HodgeTable, LocusReport)
from src.loci.tables import (CTOP_EXPANSION, FORMS_ROWS, FUNDAMENTAL_CLASS, GRASSMANN_BUNDLE_ROWS, SCHUR_COFACTOR,
                             SCHUR_FULL, SPORADIC_BUNDLES, TODD_FORMULA)
from src.loci.universal import (FORMS_RANK, forms_pushforwards, generic_fundamental_class, generic_top_class,
                                todd_base, universal_euler_polynomial)
from src.sheaves.sheaf_class import SheafClass
from src.symfun.characters import GLCharacter, schur_character
from src.symfun.littlewood_richardson import elementary_symbols, to_schur_basis
from src.symfun.partitions import SchurVector
from src.utils.exact import to_fraction, to_json
from src.utils.log import get_logger

logger = get_logger('forms')

CODIMENSION = 5
GENERIC_DIM = 9

# filtration keys of the four pieces of Omega^1 on the zero locus
_QW_CONORMAL, _BASE_CONORMAL, _RELATIVE_FORMS, _AMBIENT_FORMS = range(4)


@dataclass
class FormsLocusConfig:
    """A rank 6 bundle E on X, with an optional twist L of the three-forms."""

    ambient: AmbientSpec
    bundle: str
    twist: Optional[str] = None
    label: str = ""

    def expression(self) -> BundleExpr:
        return parse_bundle(self.bundle)

    def twist_expression(self) -> Optional[BundleExpr]:
        return parse_bundle(self.twist) if self.twist else None

    def describe(self) -> str:
        text = f"E = {self.bundle} on {self.ambient.describe()}"
        if self.twist:
            text += f", L = {self.twist}"
        return text


def closed_form_class(chern: GradedClass) -> GradedClass:
    """e1 (e1^4 + e2^2 + 2 e1 e3 - 4 e4) in the Chern classes of E."""
    e = [chern.part(i) for i in range(5)]
    return e[1] * (e[1] ** 4 + e[2] ** 2 + 2 * e[1] * e[3] - 4 * e[4])


def schur_forms() -> Tuple[SchurVector, SchurVector]:
    """Schur expansions of the cofactor of e1 and of the whole degree 5 class."""
    expr = sympy.expand(generic_fundamental_class().to_expr())
    e1 = elementary_symbols(FORMS_RANK)[0]
    cofactor, remainder = sympy.div(expr, e1, *elementary_symbols(FORMS_RANK))
    if remainder != 0:
        raise ConsistencyError(f"fundamental class is not divisible by e1: remainder {remainder}")
    return to_schur_basis(cofactor, FORMS_RANK), to_schur_basis(expr, FORMS_RANK)


def _is_split(expr: BundleExpr) -> bool:
    summands = expr.summands()
    return len(summands) == FORMS_RANK and sum(isinstance(s, Trivial) for s in summands) == FORMS_RANK - 1


class FormsLocus:
    """The locus of partially decomposable three-forms for a configuration, built lazily."""

    def __init__(self, cfg: FormsLocusConfig, ambient: Ambient = None, generic_dim: int = GENERIC_DIM):
        self.cfg = cfg
        self.ambient = ambient or cfg.ambient.build()
        self.variety: Variety = self.ambient.variety
        self.expr = cfg.expression()
        self.bundle = self.expr.to_sheaf(self.variety).lift(self.variety.ring)
        if self.bundle.rank != FORMS_RANK:
            raise DomainError(f"E must have rank {FORMS_RANK}, got {self.bundle.rank}")
        twist = cfg.twist_expression()
        self.twist: Optional[SheafClass] = None
        if twist is not None:
            self.twist = twist.to_sheaf(self.variety).lift(self.variety.ring)
            if self.twist.rank != 1:
                raise DomainError(f"the twist must be a line bundle, got rank {self.twist.rank}")
        self.generic_dim = max(generic_dim, self.variety.dim)
        self._tower = None
        self.class_check: Optional[bool] = None
        self._integrality: List[bool] = []

    @property
    def dim(self) -> int:
        return self.variety.dim - CODIMENSION

    @property
    def twisted(self) -> bool:
        return self.twist is not None and not self.twist.c1().is_zero()

    def require_dimension(self):
        if self.dim < 0:
            raise DomainError(f"expected dimension {self.dim} is negative for {self.cfg.describe()}")

    def anticanonical(self) -> GradedClass:
        """c1(T_X) - 5 c1(E) - 10 c1(L): the class whose pullback is -K of the locus."""
        kappa = self.variety.tangent.c1() - 5 * self.bundle.c1()
        if self.twist is not None:
            kappa = kappa - 10 * self.twist.c1()
        return kappa

    def canonical_description(self) -> str:
        kappa = self.anticanonical()
        if kappa.is_zero():
            return "K = 0"
        return f"-K = pullback of {kappa}"

    def classify(self) -> Classification:
        kappa = self.anticanonical()
        diagnostics = []
        degenerate = _is_split(self.expr)
        if degenerate:
            diagnostics.append("E splits as a line bundle L' plus 5 O: the locus is the zero locus "
                               "of a general section of 5 L'")
        if kappa.is_zero():
            kind = 'twisted' if self.twisted else 'cy'
            return Classification(kind, 0, None, degenerate, diagnostics)
        if self.variety.kind == 'relative':
            diagnostics.append(f"-K = {kappa}; ampleness on a relative ambient is not decided")
            return Classification('violated', None, None, degenerate, diagnostics)
        ring = self.variety.ring
        coefficients = []
        for monom, c in kappa.terms():
            if ring.monomial_degree(monom) != 1:
                continue
            coefficients.append(c)
        if coefficients and all(c > 0 for c in coefficients) and all(c.denominator == 1 for c in coefficients):
            index = reduce(gcd, (int(c) for c in coefficients))
            coindex = self.dim + 1 - index
            if index > self.dim + 1:
                diagnostics.append(f"index {index} exceeds dim + 1 = {self.dim + 1} (Kobayashi-Ochiai): "
                                   "the locus must be empty")
            elif index == self.dim + 1:
                diagnostics.append("index dim + 1: a projective space by Kobayashi-Ochiai")
            elif index == self.dim:
                diagnostics.append("index dim: a quadric by Kobayashi-Ochiai")
            return Classification('fano', index, coindex, degenerate, diagnostics)
        diagnostics.append(f"-K = {kappa} is neither trivial nor a positive multiple of the polarization")
        return Classification('violated', None, None, degenerate, diagnostics)

    def tower(self) -> Tuple[Variety, Variety]:
        """P(E) over X and the zero locus of wedge^3 Q (x) L in it."""
        if self._tower is None:
            space = projective_bundle(self.variety, self.bundle)
            normal = space.sheaf('Qrel').wedge(3)
            if self.twist is not None:
                normal = normal * self.twist.lift(space.ring)
            locus = zero_locus(space, normal, f"resolution of the forms locus in {space.name}")
            logger.info("built %s of dimension %d", locus.name, locus.dim)
            self._tower = (space, locus)
        return self._tower

    def universal(self):
        return forms_pushforwards(self.generic_dim, 2, self.twisted)

    def evaluate(self, cls: GradedClass) -> GradedClass:
        push = self.universal()
        return push.evaluate(cls, self.variety, self.bundle, self.twist if self.twisted else None)

    def fundamental_class(self, method: str = 'universal') -> GradedClass:
        if method == 'tower':
            space, locus = self.tower()
            pushed = space.pushforward(locus.fundamental_class())
            if self.twisted:
                expected = self.evaluate(self.universal().fundamental_class)
            else:
                expected = closed_form_class(self.bundle.chern)
        else:
            pushed = self.evaluate(self.universal().fundamental_class)
            if self.twisted:
                # no closed form with a twist; method='tower' cross-checks this case
                logger.debug("twisted class on %s taken from the universal formula alone", self.cfg.describe())
                self.class_check = None
                return pushed
            expected = closed_form_class(self.bundle.chern)
        self.class_check = pushed == expected
        if pushed != expected:
            raise ConsistencyError(f"fundamental class mismatch on {self.cfg.describe()}: "
                                   f"{pushed} versus {expected}")
        return pushed

    def is_nonempty(self, fundamental: GradedClass) -> bool:
        """Whether the class pairs non-trivially with some monomial in divisors of X."""
        divisors = self.variety.degree_one_classes()
        if self.dim == 0:
            return self.variety.integrate(fundamental) != 0
        for combo in combinations_with_replacement(range(len(divisors)), self.dim):
            cls = fundamental
            for i in combo:
                cls = cls * divisors[i]
            if self.variety.integrate(cls) != 0:
                return True
        return False

    def _checked(self, value, what: str) -> Fraction:
        value = to_fraction(value)
        self._integrality.append(value.denominator == 1)
        if value.denominator != 1:
            raise ConsistencyError(f"{what} = {value} is not an integer on {self.cfg.describe()}")
        return value

    def invariants(self, method: str = 'universal', forms: Sequence[int] = None) -> LocusReport:
        self.require_dimension()
        self._integrality = []
        classification = self.classify()
        d = self.dim
        report = LocusReport(
            label=self.cfg.label or self.cfg.describe(),
            ambient=self.ambient.spec.describe(),
            bundle=self.cfg.bundle + (f" twisted by {self.cfg.twist}" if self.cfg.twist else ""),
            dim=d,
            canonical=self.canonical_description(),
            classification=classification,
            method=method,
        )
        report.note(GENERAL_SECTION)
        fundamental = self.fundamental_class(method)
        report.fundamental_class = str(fundamental)
        if not self.twisted:
            cofactor, _ = schur_forms()
            report.schur_form = f"e1*({cofactor})"
        report.nonempty = self.is_nonempty(fundamental)
        if forms is None:
            forms = range(1, max(1, d // 2) + 1) if d >= 2 else ()
        if method == 'tower':
            self._fill_from_tower(report, forms)
        elif method == 'universal':
            self._fill_from_universal(report, forms, fundamental)
        else:
            raise DomainError(f"unknown method {method}; expected 'universal' or 'tower'")
        if self.class_check is not None:
            report.record(CLASS_CHECK, self.class_check)
        if self._integrality:
            report.record(INTEGRALITY_CHECK, all(self._integrality))
        if classification.kind == 'fano':
            report.note(KODAIRA_VANISHING)
        logger.info("%s: dim %d, chi(O) = %s", report.label, d, report.chi_O)
        return report

    def _fill_from_universal(self, report: LocusReport, forms: Sequence[int], fundamental: GradedClass):
        X = self.variety
        push = self.universal()
        td = X.todd()
        pushed = [self.evaluate(c) for c in push.euler]
        report.chi_O = self._checked(X.integrate(td * pushed[0]), "chi(O)")
        if forms:
            wedges = X.cotangent.wedges(max(forms))
            for p in forms:
                if p >= len(pushed):
                    raise DomainError(f"forms of degree {p} need a larger generic computation")
                total = Fraction(0)
                for a in range(p + 1):
                    total += X.integrate(wedges[a].ch * td * pushed[p - a])
                report.chi_omega[p] = self._checked(total, f"chi(Omega^{p})")
        kappa = self.anticanonical()
        report.anticanonical_degree = self._checked(X.integrate(kappa ** self.dim * fundamental), "(-K)^dim")
        line = SheafClass.line(kappa)
        report.h0_anticanonical = self._checked(X.integrate(line.ch * td * pushed[0]), "chi(-K)")

    def _fill_from_tower(self, report: LocusReport, forms: Sequence[int]):
        space, locus = self.tower()
        report.chi_O = self._checked(locus.euler_characteristic(locus.trivial()), "chi(O)")
        if forms:
            wedges = locus.cotangent.wedges(max(forms))
            for p in forms:
                report.chi_omega[p] = self._checked(locus.euler_characteristic(wedges[p]), f"chi(Omega^{p})")
        kappa = locus.tangent.c1()
        report.anticanonical_degree = self._checked(locus.integrate(kappa ** self.dim), "(-K)^dim")
        report.h0_anticanonical = self._checked(locus.euler_characteristic(SheafClass.line(kappa)), "chi(-K)")

    def divisor_rank(self) -> int:
        """Rank of the matrix of top intersection numbers of the divisors pulled back to the locus."""
        X = self.variety
        hyperplane = [self.evaluate(c) for c in self.universal().hyperplane]
        d = self.dim
        if d >= len(hyperplane):
            raise DomainError("divisor rank needs more hyperplane pushforwards")
        divisors: List[Dict[int, GradedClass]] = [{0: c} for c in X.degree_one_classes()]
        divisors.append({1: X.ring.one()})

        def times(a: Dict[int, GradedClass], b: Dict[int, GradedClass]) -> Dict[int, GradedClass]:
            out: Dict[int, GradedClass] = {}
            for i, x in a.items():
                for j, y in b.items():
                    out[i + j] = out.get(i + j, X.ring.zero()) + x * y
            return out

        def integral(cls: Dict[int, GradedClass]) -> Fraction:
            return sum((X.integrate(c * hyperplane[i]) for i, c in cls.items() if i < len(hyperplane)),
                       Fraction(0))

        if d == 0:
            return 0
        rows = []
        for combo in combinations_with_replacement(range(len(divisors)), d - 1):
            prefix = reduce(times, (divisors[i] for i in combo), {0: X.ring.one()})
            rows.append([integral(times(prefix, D)) for D in divisors])
        matrix = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in rows])
        return matrix.rank()

    def _assembly(self, coefficient: str, extra: GLCharacter, key: int, shift: int,
                  max_dim: int = None) -> SpectralAssembly:
        flag = self.ambient.require_flag()
        dual = self.expr.to_character(flag).dual()
        letters = dual.weights()
        assembly = SpectralAssembly()
        cache: Dict[Tuple[int, ...], GLCharacter] = {}
        for i in range(11):
            for q, lam in relative_pushforward(i, coefficient):
                if lam not in cache:
                    cache[lam] = schur_character(lam, letters, flag.n, flag.blocks)
                chi = cache[lam] * extra
                assembly.extend(koszul_terms(flag, self.ambient.cuts, chi, (key, -i), q - i + shift, max_dim))
        return assembly

    def hodge_numbers(self, max_dim: int = None) -> HodgeTable:
        """Hodge numbers of a threefold locus from the Koszul and Leray assembly."""
        if self.ambient.is_relative or self.ambient.flag is None:
            raise DomainError(f"{self.variety.name} is not a homogeneous type A ambient")
        if self.dim != 3:
            raise DomainError(f"the Hodge assembly covers threefolds, the locus has dimension {self.dim}")
        flag = self.ambient.flag
        trivial = flag.trivial_character()
        structure = self._assembly('O', trivial, 0, 0, max_dim)
        chi = self.invariants('universal', forms=(1,))
        if structure.euler() != chi.chi_O:
            raise ConsistencyError(f"Koszul Euler characteristic {structure.euler()} differs from "
                                   f"Riemann-Roch {chi.chi_O}")
        o_bounds = structure.bounds()
        forms = self._assembly('QW*', trivial, _QW_CONORMAL, -1, max_dim)
        conormal = flag.zero_character()
        for cut in self.ambient.cuts:
            conormal = conormal + cut.to_character(flag)
        if self.ambient.cuts:
            forms.extend(self._assembly('O', conormal.dual(), _BASE_CONORMAL, -1, max_dim))
        forms.extend(self._assembly('Omega', trivial, _RELATIVE_FORMS, 0, max_dim))
        forms.extend(self._assembly('O', flag.cotangent(), _AMBIENT_FORMS, 0, max_dim))
        if forms.euler() != chi.chi_omega[1]:
            raise ConsistencyError(f"Koszul Euler characteristic of Omega^1 {forms.euler()} differs from "
                                   f"Riemann-Roch {chi.chi_omega[1]}")
        omega = forms.bounds()
        h10 = o_bounds.get(1, (0, 0))
        h20 = o_bounds.get(2, (0, 0))
        omega = intersect(omega, 0, h10)
        omega = intersect(omega, 3, h20)
        rank = self.divisor_rank()
        omega = intersect(omega, 1, (rank, omega.get(1, (0, 0))[1]))
        omega = tighten_with_euler(omega, forms.euler())
        table = HodgeTable(divisor_rank=rank)
        table.numbers = {
            'h00': o_bounds.get(0, (0, 0)),
            'h10': h10,
            'h20': h20,
            'h30': o_bounds.get(3, (0, 0)),
            'h11': omega.get(1, (0, 0)),
            'h21': omega.get(2, (0, 0)),
        }
        table.structure = {'O': o_bounds, 'Omega1': omega}
        if not table.is_exact():
            logger.warning("%s: Hodge numbers are ambiguous: %s", self.cfg.label or self.cfg.describe(),
                           {k: v for k, v in table.numbers.items() if v[0] != v[1]})
        return table


def check_conditions(cfg: FormsLocusConfig) -> Classification:
    return FormsLocus(cfg).classify()


def fundamental_class(cfg: FormsLocusConfig, method: str = 'universal') -> GradedClass:
    return FormsLocus(cfg).fundamental_class(method)


def invariants(cfg: FormsLocusConfig, method: str = 'universal', hodge: bool = False) -> LocusReport:
    locus = FormsLocus(cfg)
    report = locus.invariants(method)
    if hodge:
        report.hodge = locus.hodge_numbers()
    return report


def hodge_numbers(cfg: FormsLocusConfig) -> HodgeTable:
    return FormsLocus(cfg).hodge_numbers()


def twisted_coherence(ambient: AmbientSpec, bundle: str, root: str) -> Tuple[LocusReport, LocusReport]:
    """Twisting by root^3 must agree with the untwisted locus of E (x) root."""
    root_expr = parse_bundle(root)
    cube = str(Tensor((root_expr, root_expr, root_expr)))
    twisted = FormsLocus(FormsLocusConfig(ambient, bundle, cube)).invariants()
    shifted_bundle = str(Tensor((parse_bundle(bundle), root_expr)))
    plain = FormsLocus(FormsLocusConfig(ambient, shifted_bundle)).invariants()
    if (twisted.chi_O, twisted.anticanonical_degree) != (plain.chi_O, plain.anticanonical_degree):
        raise ConsistencyError(f"twisted locus gives chi = {twisted.chi_O}, untwisted gives {plain.chi_O}")
    return twisted, plain


@dataclass
class GrassmannBundleCheck:
    label: str
    admissible: bool
    condition: str
    config: Optional[FormsLocusConfig] = None
    diagnostics: List[str] = field(default_factory=list)


def check_grassmann_bundle(label: str, base: str, cuts: Sequence[str], bundle_f: str, k: int,
                           line: Optional[str] = None, bundle: Optional[str] = None) -> GrassmannBundleCheck:
    """Conditions for E = U^* + (6-k) O on Gr(k, F) to give a locus with trivial canonical class.

    Without `line` the requirement is K_Z (x) det(F^*)^k = O; with `line` it is
    K_Z (x) det(F^*)^k = line^5 and E gains the summand line^*.
    """
    Z = AmbientSpec(base, list(cuts)).build().variety
    F = parse_bundle(bundle_f).to_sheaf(Z).lift(Z.ring)
    if F.rank != 5:
        return GrassmannBundleCheck(label, False, 'rank', diagnostics=[f"rank F = {F.rank}, expected 5"])
    if not 0 < k < 5:
        return GrassmannBundleCheck(label, False, 'k', diagnostics=[f"k = {k} is out of range"])
    excess = -Z.tangent.c1() - k * F.c1()
    condition = 'trivial'
    if line is not None:
        excess = excess - 5 * parse_bundle(line).to_sheaf(Z).lift(Z.ring).c1()
        condition = 'line'
    if not excess.is_zero():
        return GrassmannBundleCheck(label, False, condition,
                                    diagnostics=[f"K_Z + k c1(F^*) differs from the target by {excess}"])
    spec = AmbientSpec(base, list(cuts), bundle_f, k)
    if bundle is None and line is None:
        bundle = f"dual(Urel)+{6 - k}*O"
    elif bundle is None:
        bundle = f"dual(Urel)+dual({line})+{5 - k}*O"
    return GrassmannBundleCheck(label, True, condition, FormsLocusConfig(spec, bundle, label=label))


@dataclass
class PolynomialCheck:
    name: str
    expected: str
    computed: str
    difference: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.difference


@dataclass
class PolynomialIdentityReport:
    checks: List[PolynomialCheck] = field(default_factory=list)
    rows: Dict[str, Tuple[Fraction, Fraction]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(a == b for a, b in self.rows.values())

    def to_dict(self) -> dict:
        return to_json({
            'passed': self.passed,
            'checks': [{'name': c.name, 'passed': c.passed, 'difference': c.difference} for c in self.checks],
            'rows': {label: {'formula': a, 'locus': b} for label, (a, b) in self.rows.items()},
        })


def _polynomial_check(name: str, computed, expected: str) -> PolynomialCheck:
    difference = sympy.expand(sympy.sympify(computed) - sympy.sympify(expected))
    terms = [] if difference == 0 else [str(t) for t in sympy.Add.make_args(difference)]
    if terms:
        logger.warning("%s: %d monomials differ, first %s", name, len(terms), terms[0])
    return PolynomialCheck(name, expected, str(computed), terms)


def todd_formula_on(variety: Variety, bundle: SheafClass) -> Fraction:
    """Integral over X of the displayed Todd polynomial with e_i, t_i the Chern classes of E and T_X."""
    base, _ = todd_base(GENERIC_DIM)
    formula = base.ring.from_expr(TODD_FORMULA)
    images = {}
    for i, name in enumerate(base.ring.names):
        source = bundle if name.startswith('e') else variety.tangent
        images[i] = source.chern.part(int(name[1:]))
    return to_fraction(variety.integrate(formula.substitute(images, variety.ring)))


def polynomial_identity_checks(rows: Sequence = None) -> PolynomialIdentityReport:
    """Symbolic identities of the class and Todd polynomials, then the Todd polynomial on concrete rows."""
    report = PolynomialIdentityReport()
    bundle, ctop = generic_top_class()
    expr = sympy.expand(ctop.to_expr())
    H = sympy.Symbol(bundle.generator)
    for power in sorted(CTOP_EXPANSION, reverse=True):
        report.checks.append(_polynomial_check(f"c_top coefficient of H^{power}", expr.coeff(H, power),
                                               CTOP_EXPANSION[power]))
    report.checks.append(_polynomial_check("fundamental class", generic_fundamental_class().to_expr(),
                                           FUNDAMENTAL_CLASS))
    cofactor, full = schur_forms()
    for name, vector, expected in (("Schur cofactor of e1", cofactor, SCHUR_COFACTOR),
                                   ("Schur form", full, SCHUR_FULL)):
        got = {tuple(p): c for p, c in vector.items()}
        diff = [f"s{p}: {got.get(p, 0)} vs {c}" for p, c in expected.items() if got.get(p, 0) != c]
        diff += [f"s{p}: {c} unexpected" for p, c in got.items() if p not in expected]
        report.checks.append(PolynomialCheck(name, str(expected), str(vector), diff))
    report.checks.append(_polynomial_check("Todd polynomial", universal_euler_polynomial(GENERIC_DIM).to_expr(),
                                           TODD_FORMULA))
    for row in rows if rows is not None else [r for r in FORMS_ROWS if not r.skip]:
        cfg = FormsLocusConfig(AmbientSpec(row.ambient, list(row.cuts)), row.bundle, label=row.label)
        locus = FormsLocus(cfg)
        if locus.variety.dim != GENERIC_DIM:
            continue
        formula = todd_formula_on(locus.variety, locus.bundle)
        report.rows[row.label] = (formula, locus.invariants(forms=()).chi_O)
    return report


def grassmann_bundle_catalog(rows: Sequence = None) -> List[GrassmannBundleCheck]:
    checks = []
    for row in rows if rows is not None else GRASSMANN_BUNDLE_ROWS + SPORADIC_BUNDLES:
        if row.skip:
            checks.append(GrassmannBundleCheck(row.label, False, 'skipped', diagnostics=[row.skip]))
            continue
        checks.append(check_grassmann_bundle(row.label, row.base, row.cuts, row.bundle_f, row.k,
                                             row.line, row.bundle))
    return checks


def generic_polynomials(dim: int = GENERIC_DIM, max_dim: int = 12) -> Dict[str, str]:
    """The universal class and Todd polynomials over a generic base of dimension `dim`."""
    if not 5 <= dim <= max_dim:
        raise DomainError(f"generic base dimension {dim} is outside 5..{max_dim}")
    bundle, ctop = generic_top_class()
    expr = sympy.expand(ctop.to_expr())
    H = sympy.Symbol(bundle.generator)
    cofactor, full = schur_forms()
    out = {
        'fundamental class': str(sympy.factor(generic_fundamental_class().to_expr())),
        'schur form': str(full),
        'schur form over e1': f"e1*({cofactor})",
    }
    for power in range(5, -1, -1):
        out[f"c_top(wedge^3 Q) coefficient of H^{power}"] = str(sympy.factor(expr.coeff(H, power)))
    out[f"todd polynomial in dimension {dim}"] = str(universal_euler_polynomial(dim).to_expr())
    return out
