from src.bott.cohomology import bott_cohomology
from src.bott.flags import parse_flag, parse_weight
from src.tools.base_tool import BaseTool


class BottTool(BaseTool):
    name = 'bott'
    help = 'cohomology of an irreducible homogeneous bundle'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('flag', help="flag variety, e.g. P5, Gr(2,7), Fl(1,2;3) or 'P2 x Gr(2,4)'")
        parser.add_argument('weight', help='weight written blockwise, e.g. 2,1|0,0,0')
        parser.add_argument('--json', metavar='OUT', help="write the JSON result to OUT ('-' for stdout)")

    def run(self, args) -> int:
        flag = parse_flag(args.flag)
        weight = parse_weight(args.weight, flag)
        result = bott_cohomology(flag, weight)
        self.emit(self.reports.bott_text(flag.name, weight, result))
        if args.json:
            self.save_json(self.reports.bott_json(flag.name, weight, result), args.json, 'bott')
        return 0
