import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Sequence, Tuple

from src.bott.cohomology import bott_cohomology, irreducible_sheaf, serre_dual_weight
from src.bott.pushforward import relative_pushforward
from src.errors import OdlError
from src.loci.ambient import AmbientSpec, build_base
from src.loci.forms import (FormsLocus, FormsLocusConfig, check_grassmann_bundle, polynomial_identity_checks,
                            twisted_coherence)
from src.loci.nilpotent import (NilpotentLocus, NilpotentLocusConfig, flag_dimension, full_cone_ci_check,
                                minimal_orbit_ci_check, orbit_catalog, singular_codimension)
from src.loci.tables import (FANO4_ROWS, FORMS_FANO3, FORMS_ROWS, FOURFOLDS, GRASSMANN_BUNDLE_ROWS, HODGE_ROWS,
                             N_VALUE_EXAMPLES, NILPOTENT_FANO3, NILPOTENT_ROWS, PUSHFORWARD_TABLES, SPORADIC_BUNDLES,
                             SPORADIC_FORMS)
from src.symfun.numerology import n_value
from src.utils.exact import to_json
from src.utils.log import get_logger

logger = get_logger('verify')

PASS, FAIL, SKIPPED = 'PASS', 'FAIL', 'SKIPPED'

SUITES = ('table1', 'table2', 'table3', 'table4-data', 'table5', 'table6', 'tables78', 'appendixB',
          'invariants', 'fano3', 'sporadic', 'fourfolds')

BOTT_SEED = 20190101
BOTT_FLAGS = (('projective_space(5)', 17), ('grassmannian(2,5)', 17), ('grassmannian(2,7)', 16))
SERRE_FLAGS = (('projective_space(5)', 20), ('grassmannian(2,5)', 10), ('grassmannian(2,7)', 20))


@dataclass
class RowVerdict:
    suite: str
    label: str
    verdict: str
    expected: Dict[str, Any] = field(default_factory=dict)
    got: Dict[str, Any] = field(default_factory=dict)
    message: str = ""

    def to_dict(self) -> dict:
        return to_json({
            'label': self.label,
            'verdict': self.verdict,
            'expected': self.expected,
            'got': self.got,
            'message': self.message,
        })


@dataclass
class SuiteResult:
    name: str
    rows: List[RowVerdict] = field(default_factory=list)
    elapsed: float = 0.0

    def count(self, verdict: str) -> int:
        return sum(1 for r in self.rows if r.verdict == verdict)

    @property
    def passed(self) -> bool:
        return self.count(FAIL) == 0

    def to_dict(self) -> dict:
        return {
            'suite': self.name,
            'passed': self.passed,
            'counts': {v: self.count(v) for v in (PASS, FAIL, SKIPPED)},
            'rows': [r.to_dict() for r in self.rows],
        }


def compare(suite: str, label: str, expected: Dict[str, Any], got: Dict[str, Any]) -> RowVerdict:
    wrong = [k for k, v in expected.items() if got.get(k) != v]
    message = "; ".join(f"{k}: expected {expected[k]}, got {got.get(k)}" for k in wrong)
    return RowVerdict(suite, label, FAIL if wrong else PASS, expected, got, message)


def _skipped(suite: str, label: str, reason: str) -> List[RowVerdict]:
    return [RowVerdict(suite, label, SKIPPED, message=reason)]


def _forms_locus(ambient: str, cuts: Sequence[str], bundle: str, twist=None, label="") -> FormsLocus:
    return FormsLocus(FormsLocusConfig(AmbientSpec(ambient, list(cuts)), bundle, twist, label))


def table1_row(row) -> List[RowVerdict]:
    locus = _forms_locus(row.ambient, row.cuts, row.bundle, label=row.label)
    report = locus.invariants(forms=(1,))
    hodge = locus.hodge_numbers()
    got = {'chi_O': report.chi_O, 'h11': hodge.interval('h11'), 'h21': hodge.interval('h21'),
           'kind': report.classification.kind}
    return [compare('table1', row.label, {'chi_O': 0, 'h11': row.h11, 'h21': row.h21, 'kind': 'cy'}, got)]


def forms_row(suite: str, row, chi: int = 2) -> List[RowVerdict]:
    if row.skip:
        return _skipped(suite, row.label, row.skip)
    report = _forms_locus(row.ambient, row.cuts, row.bundle, row.twist, row.label).invariants(forms=())
    kind = 'twisted' if row.twist else 'cy'
    got = {'chi_O': report.chi_O, 'nonempty': report.nonempty, 'kind': report.classification.kind}
    return [compare(suite, row.label, {'chi_O': chi, 'nonempty': True, 'kind': kind}, got)]


def bundle_row(suite: str, row) -> List[RowVerdict]:
    if row.skip:
        return _skipped(suite, row.label, row.skip)
    check = check_grassmann_bundle(row.label, row.base, row.cuts, row.bundle_f, row.k, row.line, row.bundle)
    if not check.admissible:
        return [RowVerdict(suite, row.label, FAIL, {'admissible': True}, {'admissible': False},
                           "; ".join(check.diagnostics))]
    report = FormsLocus(check.config).invariants(forms=())
    got = {'admissible': True, 'chi_O': report.chi_O, 'kind': report.classification.kind}
    return [compare(suite, row.label, {'admissible': True, 'chi_O': 2, 'kind': 'cy'}, got)]


def orbit_rows() -> List[RowVerdict]:
    verdicts = []
    for orbit in orbit_catalog():
        expected = {'ell_p': orbit.ell_p}
        got = {'ell_p': orbit.levi_excess}
        if orbit.computable:
            partition = orbit.partition()
            expected.update({'dim_gp': orbit.dim_gp, 'codim_sing': orbit.codim_sing})
            got.update({'dim_gp': flag_dimension(orbit.flag_dims, orbit.rank),
                        'codim_sing': singular_codimension(partition)})
        verdict = compare('table4-data', f"({orbit.id})", expected, got)
        if not orbit.birational:
            verdict.message = (verdict.message + "; " if verdict.message else "") + "degree 2 collapsing"
        verdicts.append(verdict)
    return verdicts


def nilpotent_row(suite: str, row, chi: int) -> List[RowVerdict]:
    if row.skip:
        return _skipped(suite, row.label, row.skip)
    cfg = NilpotentLocusConfig(AmbientSpec(row.ambient, list(row.cuts)), row.bundle, row.twist, orbit=row.orbit,
                               label=row.label)
    report = NilpotentLocus(cfg).invariants(forms=())
    expected = {'chi_O': row.expected.get('chi', chi)}
    got = {'chi_O': report.chi_O}
    if 'degree' in row.expected:
        expected['anticanonical_degree'] = row.expected['degree']
        got['anticanonical_degree'] = report.anticanonical_degree
    return [compare(suite, row.label, expected, got)]


def fano_row(suite: str, row) -> List[RowVerdict]:
    if row.skip:
        return _skipped(suite, row.label, row.skip)
    forms = tuple(sorted(row.chi_omega))
    spec = AmbientSpec(row.ambient, list(row.cuts))
    if row.orbit is None:
        report = FormsLocus(FormsLocusConfig(spec, row.bundle, row.twist, row.label)).invariants(forms=forms)
    else:
        cfg = NilpotentLocusConfig(spec, row.bundle, row.twist or "O", orbit=row.orbit, label=row.label)
        report = NilpotentLocus(cfg).invariants(forms=forms)
    expected = {'chi_O': 1, 'anticanonical_degree': row.degree}
    expected.update({f"chi_omega{p}": v for p, v in row.chi_omega.items()})
    got = {'chi_O': report.chi_O, 'anticanonical_degree': report.anticanonical_degree}
    got.update({f"chi_omega{p}": report.chi_omega.get(p) for p in row.chi_omega})
    if row.h0 is not None:
        expected['h0'] = row.h0
        got['h0'] = report.h0_anticanonical
    return [compare(suite, row.label, expected, got)]


def pushforward_rows(coefficient: str) -> List[RowVerdict]:
    table = PUSHFORWARD_TABLES[coefficient]
    computed: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
    for i in range(11):
        for q, lam in relative_pushforward(i, coefficient):
            computed.setdefault((i, q), []).append(tuple(lam))
    verdicts = []
    for key in sorted(set(table) | set(computed)):
        expected = sorted(table.get(key, []))
        got = sorted(computed.get(key, []))
        verdicts.append(compare('tables78', f"{coefficient} i={key[0]} q={key[1]}", {'partitions': expected},
                                {'partitions': got}))
    return verdicts


def polynomial_identity_rows() -> List[RowVerdict]:
    report = polynomial_identity_checks()
    verdicts = []
    for check in report.checks:
        verdicts.append(RowVerdict('appendixB', check.name, PASS if check.passed else FAIL,
                                   message="; ".join(check.difference[:5])))
    for label, (formula, chi) in report.rows.items():
        verdicts.append(compare('appendixB', f"Todd polynomial on {label}", {'chi_O': chi}, {'chi_O': formula}))
    return verdicts


def bott_hrr_rows() -> List[RowVerdict]:
    rng = random.Random(BOTT_SEED)
    verdicts = []
    for text, count in BOTT_FLAGS:
        variety, flag = build_base(text)
        for _ in range(count):
            weight = []
            for b in flag.blocks:
                weight.extend(sorted((rng.randint(-2, 2) for _ in range(b)), reverse=True))
            weight = tuple(weight)
            result = bott_cohomology(flag, weight)
            bott = 0 if result is None else (-1) ** result.degree * result.dimension
            hrr = variety.euler_characteristic(irreducible_sheaf(variety, flag, weight))
            verdicts.append(compare('invariants', f"Bott/HRR {flag.name} {weight}", {'chi': bott}, {'chi': hrr}))
    return verdicts


def serre_rows() -> List[RowVerdict]:
    rng = random.Random(BOTT_SEED + 1)
    verdicts = []
    for text, count in SERRE_FLAGS:
        _, flag = build_base(text)
        for _ in range(count):
            weight = []
            for b in flag.blocks:
                weight.extend(sorted((rng.randint(-3, 3) for _ in range(b)), reverse=True))
            weight = tuple(weight)
            first = bott_cohomology(flag, weight)
            second = bott_cohomology(flag, serre_dual_weight(flag, weight))
            expected = None if first is None else (flag.dim - first.degree, first.dimension)
            got = None if second is None else (second.degree, second.dimension)
            verdicts.append(compare('invariants', f"Serre duality {flag.name} {weight}", {'dual': expected},
                                    {'dual': got}))
    return verdicts


def model_rows() -> List[RowVerdict]:
    checks = [
        ("full cone of sl_2 on P2 x P2",
         lambda: full_cone_ci_check(AmbientSpec('product(projective_space(2),projective_space(2))'), '2*O',
                                    'O(1,1)')),
        ("full cone of sl_3 on P5", lambda: full_cone_ci_check(AmbientSpec('projective_space(5)'), '3*O', 'O(1)')),
        ("full cone of sl_4 on P4", lambda: full_cone_ci_check(AmbientSpec('projective_space(4)'), '4*O', 'O(1)')),
        ("minimal orbit of sl_3 on Q7", lambda: minimal_orbit_ci_check(AmbientSpec('quadric(7)'), 3)),
        ("minimal orbit of sl_4 on P12", lambda: minimal_orbit_ci_check(AmbientSpec('projective_space(12)'), 4)),
    ]
    verdicts = []
    for label, check in checks:
        try:
            result = check()
        except OdlError as exc:
            verdicts.append(RowVerdict('invariants', label, FAIL, message=str(exc)))
            continue
        verdicts.append(compare('invariants', label, result.model, result.locus))
    return verdicts


def numerology_rows() -> List[RowVerdict]:
    return [compare('invariants', f"n_value{args}", {'n': n}, {'n': n_value(*args)})
            for args, n in N_VALUE_EXAMPLES]


def coherence_row() -> List[RowVerdict]:
    twisted, plain = twisted_coherence(AmbientSpec('projective_space(9)'), '2*O+4*O(-1)', 'O(1)')
    return [compare('invariants', "twisted coherence on P9", {'chi_O': plain.chi_O}, {'chi_O': twisted.chi_O})]


def class_row() -> List[RowVerdict]:
    locus = _forms_locus('projective_space(9)', (), '2*O(1)+4*O', label='f.1')
    universal = locus.fundamental_class()
    tower = locus.fundamental_class('tower')
    return [compare('invariants', "class double computation on f.1", {'class': str(universal)},
                    {'class': str(tower)})]


def _jobs(suite: str) -> List[Tuple[Callable, tuple]]:
    if suite == 'table1':
        return [(table1_row, (row,)) for row in HODGE_ROWS]
    if suite == 'table2':
        return [(forms_row, ('table2', row)) for row in FORMS_ROWS]
    if suite == 'table3':
        return [(bundle_row, ('table3', row)) for row in GRASSMANN_BUNDLE_ROWS]
    if suite == 'table4-data':
        return [(orbit_rows, ())]
    if suite == 'table5':
        return [(nilpotent_row, ('table5', row, 1)) for row in NILPOTENT_ROWS]
    if suite == 'table6':
        return [(fano_row, ('table6', row)) for row in FANO4_ROWS]
    if suite == 'tables78':
        return [(pushforward_rows, (c,)) for c in PUSHFORWARD_TABLES]
    if suite == 'appendixB':
        return [(polynomial_identity_rows, ())]
    if suite == 'invariants':
        return [(bott_hrr_rows, ()), (serre_rows, ()), (model_rows, ()), (numerology_rows, ()),
                (coherence_row, ()), (class_row, ())]
    if suite == 'fano3':
        return [(fano_row, ('fano3', row)) for row in FORMS_FANO3 + NILPOTENT_FANO3]
    if suite == 'sporadic':
        return ([(bundle_row, ('sporadic', row)) for row in SPORADIC_BUNDLES]
                + [(forms_row, ('sporadic', row)) for row in SPORADIC_FORMS])
    if suite == 'fourfolds':
        return [(nilpotent_row, ('fourfolds', row, 2)) for row in FOURFOLDS]
    raise OdlError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES + ('all',))}")


def _run_job(suite: str, job: Tuple[Callable, tuple]) -> List[RowVerdict]:
    func, args = job
    try:
        return func(*args)
    except OdlError as exc:
        label = next((a.label for a in args if hasattr(a, "label")), func.__name__)
        logger.warning("%s: %s failed: %s", suite, label, exc)
        return [RowVerdict(suite, str(label), FAIL, message=str(exc))]


class VerificationManager:
    def __init__(self, workers: int = 1):
        self.workers = max(1, workers)
        self.results: List[SuiteResult] = []

    def names(self, suite: str) -> Tuple[str, ...]:
        return SUITES if suite == 'all' else (suite,)

    def run(self, suite: str) -> List[SuiteResult]:
        results = [self.run_suite(name) for name in self.names(suite)]
        self.results.extend(results)
        return results

    def run_suite(self, name: str) -> SuiteResult:
        jobs = _jobs(name)
        start = time.perf_counter()
        if self.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                batches = list(pool.map(_run_job, [name] * len(jobs), jobs))
        else:
            batches = [_run_job(name, job) for job in jobs]
        result = SuiteResult(name, [v for batch in batches for v in batch], time.perf_counter() - start)
        logger.info("suite %s: %d PASS, %d FAIL, %d SKIPPED in %.1fs", name, result.count(PASS),
                    result.count(FAIL), result.count(SKIPPED), result.elapsed)
        for row in result.rows:
            if row.verdict == SKIPPED:
                logger.warning("%s %s skipped: %s", name, row.label, row.message)
        return result

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)
