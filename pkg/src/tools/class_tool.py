from src.errors import ConfigError
from src.loci.forms import generic_polynomials
from src.tools.base_tool import BaseTool


class ClassTool(BaseTool):
    name = 'class'
    help = 'universal fundamental class and Todd polynomial of the forms locus'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--generic', action='store_true', help='over a generic base (the only mode)')
        parser.add_argument('--dim', type=int, default=None, help='dimension of the generic base')
        parser.add_argument('--json', metavar='OUT', help="write the polynomials to OUT ('-' for stdout)")

    def run(self, args) -> int:
        if not args.generic:
            raise ConfigError("class is only available with --generic", 1, 1)
        entries = generic_polynomials(args.dim or self.settings.generic_dim, self.settings.max_generic_dim)
        self.emit(self.reports.polynomials_text(entries))
        if args.json:
            self.save_json(self.reports.polynomials_json(entries), args.json, 'generic')
        return 0
