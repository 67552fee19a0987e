import time

from src.config.run_config import load_config
from src.errors import ConfigError
from src.loci.forms import FormsLocus, generic_polynomials
from src.loci.nilpotent import NilpotentLocus
from src.managers.verification_manager import FAIL, PASS
from src.tools.base_tool import BaseTool
from src.utils.log import get_logger

logger = get_logger('compute')


class ComputeTool(BaseTool):
    name = 'compute'
    help = 'compute the invariants of the locus described by a run file'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('file', nargs='?', help='run file ([variety], [bundle], [locus], [output])')
        parser.add_argument('--json', metavar='OUT', help="write the JSON report to OUT ('-' for stdout)")
        parser.add_argument('--generic', action='store_true',
                            help='print the universal class and Todd polynomials')

    def run(self, args) -> int:
        if args.generic:
            entries = generic_polynomials(self.settings.generic_dim, self.settings.max_generic_dim)
            self.emit(self.reports.polynomials_text(entries))
            if args.json and not args.file:
                self.save_json(self.reports.polynomials_json(entries), args.json, 'generic')
        if not args.file:
            if args.generic:
                return 0
            raise ConfigError("compute needs a run file or --generic", 1, 1)
        cfg = load_config(args.file)
        start = time.perf_counter()
        if cfg.kind == 'forms-y2':
            locus = FormsLocus(cfg.locus_config(), generic_dim=self.settings.generic_dim)
            report = locus.invariants(cfg.method)
            if cfg.hodge:
                report.hodge = locus.hodge_numbers(self.settings.max_character_dim)
        else:
            report = NilpotentLocus(cfg.locus_config()).invariants()
        verdicts = [{'check': check, 'verdict': PASS if passed else FAIL} for check, passed in report.checks.items()]
        elapsed = time.perf_counter() - start
        logger.info("computed %s in %.2fs", report.label, elapsed)
        self.emit(self.reports.locus_text(report, elapsed))
        if args.json:
            path = self.save_json(self.reports.locus_json(report, verdicts), args.json, 'locus')
            logger.info("wrote %s", path)
        return 0
