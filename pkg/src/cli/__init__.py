"""Command handlers, corpora and reports behind the gt entry point"""

from src.cli.commands import check, cmd_check, cmd_compute, cmd_crosscheck, compute, crosscheck
from src.cli.reports import ComputeResult, SuiteReport
from src.cli.runner import CorpusRunner

__all__ = [
    'ComputeResult', 'CorpusRunner', 'SuiteReport', 'check', 'cmd_check', 'cmd_compute',
    'cmd_crosscheck', 'compute', 'crosscheck',
]
