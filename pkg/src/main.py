import argparse
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src import __version__
from src.config.settings import EngineSettings
from src.errors import ConfigError, ConsistencyError, DomainError
from src.tools import TOOLS
from src.utils.log import get_logger, set_verbosity

logger = get_logger()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='odl', description='Orbital degeneracy loci: exact invariants')
    parser.add_argument('--version', action='version', version=f"odl {__version__}")
    parser.add_argument('--settings', help='engine settings (JSON)')
    parser.add_argument('--verbose', action='store_true', help='log pipeline milestones')
    parser.add_argument('--debug', action='store_true', help='log intermediate sizes')
    commands = parser.add_subparsers(dest='command', required=True)
    for tool in TOOLS:
        sub = commands.add_parser(tool.name, help=tool.help)
        tool.add_arguments(sub)
        sub.set_defaults(tool=tool)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    set_verbosity(args.verbose, args.debug)
    try:
        settings = EngineSettings.load(args.settings)
        if not (args.verbose or args.debug):
            logger.setLevel(settings.log_level)
        return args.tool(settings, out).run(args)
    except ConfigError as exc:
        print(f"odl: config error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ConsistencyError) as exc:
        print(f"odl: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
