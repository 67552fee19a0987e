from .exact import format_number, normalize, parse_number, to_fraction, to_json
from .log import get_logger, set_verbosity
from .report_writer import ReportWriter

__all__ = ['format_number', 'normalize', 'parse_number', 'to_fraction', 'to_json', 'get_logger', 'set_verbosity',
           'ReportWriter']
