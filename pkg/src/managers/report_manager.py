import json
from typing import Any, Dict, List, Optional

from src import __version__
from src.bott.cohomology import BottResult
from src.loci.reports import LocusReport
from src.managers.verification_manager import FAIL, PASS, SKIPPED, SuiteResult
from src.utils.exact import format_number, to_json


class ReportManager:
    """Text and JSON rendering of locus reports, suite results and Bott computations.

    JSON output never carries timings so that reruns are byte-identical.
    """

    def __init__(self, indent: int = 2):
        self.indent = indent

    def dumps(self, payload: Dict[str, Any]) -> str:
        document = {'engine': 'odl', 'version': __version__}
        document.update(payload)
        return json.dumps(to_json(document), indent=self.indent, ensure_ascii=False, sort_keys=False) + "\n"

    def locus_json(self, report: LocusReport, verdicts: Optional[List[Dict[str, Any]]] = None) -> str:
        body = report.to_dict()
        body['assumptions'] = list(report.notes)
        body['verdicts'] = verdicts or []
        return self.dumps({'report': body})

    def locus_text(self, report: LocusReport, elapsed: Optional[float] = None) -> str:
        lines = [
            f"{report.label}",
            f"  ambient        {report.ambient}",
            f"  bundle         {report.bundle}",
            f"  dimension      {report.dim}",
            f"  canonical      {report.canonical}",
            f"  type           {report.classification.kind}",
        ]
        if report.classification.index is not None and report.classification.kind != 'cy':
            lines.append(f"  index          {report.classification.index}")
        if report.fundamental_class:
            lines.append(f"  class          {report.fundamental_class}")
        if report.schur_form:
            lines.append(f"  schur form     {report.schur_form}")
        if report.nonempty is not None:
            lines.append(f"  nonempty       {'yes' if report.nonempty else 'no'}")
        if report.chi_O is not None:
            lines.append(f"  chi(O)         {format_number(report.chi_O)}")
        for p, value in sorted(report.chi_omega.items()):
            lines.append(f"  chi(Omega^{p})   {format_number(value)}")
        if report.anticanonical_degree is not None:
            lines.append(f"  (-K)^{report.dim}         {format_number(report.anticanonical_degree)}")
        if report.h0_anticanonical is not None:
            lines.append(f"  h0(-K)         {format_number(report.h0_anticanonical)}")
        if report.hodge is not None:
            for name, (lo, hi) in sorted(report.hodge.numbers.items()):
                value = str(lo) if lo == hi else f"{lo}..{hi}"
                lines.append(f"  {name:<14} {value}")
            if report.hodge.divisor_rank is not None:
                lines.append(f"  divisor rank   {report.hodge.divisor_rank}")
        for text in report.classification.diagnostics:
            lines.append(f"  ! {text}")
        for note in report.notes:
            lines.append(f"  * {note}")
        if elapsed is not None:
            lines.append(f"  computed by {report.method} in {elapsed:.2f}s")
        return "\n".join(lines) + "\n"

    def suites_json(self, results: List[SuiteResult]) -> str:
        return self.dumps({
            'passed': all(r.passed for r in results),
            'suites': [r.to_dict() for r in results],
        })

    def suites_text(self, results: List[SuiteResult]) -> str:
        lines = []
        for result in results:
            lines.append(f"[{result.name}] {'PASS' if result.passed else 'FAIL'}: "
                         f"{result.count(PASS)} passed, {result.count(FAIL)} failed, "
                         f"{result.count(SKIPPED)} skipped ({result.elapsed:.1f}s)")
            for row in result.rows:
                line = f"  {row.verdict:<8} {row.label}"
                if row.message:
                    line += f"  {row.message}"
                lines.append(line)
        return "\n".join(lines) + "\n"

    def bott_text(self, flag_name: str, weight, result: Optional[BottResult]) -> str:
        head = f"{flag_name}, weight {','.join(str(w) for w in weight)}"
        if result is None:
            return f"{head}: acyclic\n"
        tops = " x ".join("S_(" + ",".join(str(x) for x in lam) + ") V^*" for lam in result.highest_weights)
        return f"{head}: H^{result.degree} = {tops}, dimension {result.dimension}\n"

    def bott_json(self, flag_name: str, weight, result: Optional[BottResult]) -> str:
        body = {'flag': flag_name, 'weight': list(weight), 'acyclic': result is None}
        if result is not None:
            body.update({'degree': result.degree,
                         'highest_weights': [list(lam) for lam in result.highest_weights],
                         'dimension': result.dimension})
        return self.dumps({'bott': body})

    def polynomials_text(self, entries: Dict[str, str]) -> str:
        return "".join(f"{name}:\n  {value}\n" for name, value in entries.items())

    def polynomials_json(self, entries: Dict[str, str]) -> str:
        return self.dumps({'polynomials': entries})
