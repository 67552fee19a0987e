from .verification_manager import FAIL, PASS, SKIPPED, SUITES, RowVerdict, SuiteResult, VerificationManager
from .report_manager import ReportManager

__all__ = ['FAIL', 'PASS', 'SKIPPED', 'SUITES', 'RowVerdict', 'SuiteResult', 'VerificationManager',
           'ReportManager']
