from src.managers.verification_manager import SUITES, VerificationManager
from src.tools.base_tool import BaseTool


class VerifyTool(BaseTool):
    name = 'verify'
    help = 'run an embedded verification suite'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('suite', choices=SUITES + ('all',))
        parser.add_argument('--json', metavar='OUT', help="write the JSON verdicts to OUT ('-' for stdout)")
        parser.add_argument('--workers', type=int, default=None, help='rows computed in parallel')

    def run(self, args) -> int:
        manager = VerificationManager(args.workers or self.settings.workers)
        results = manager.run(args.suite)
        self.emit(self.reports.suites_text(results))
        if args.json:
            self.save_json(self.reports.suites_json(results), args.json, f"verify_{args.suite}")
        return 0 if manager.passed else 1
