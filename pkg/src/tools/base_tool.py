import sys
from abc import ABC, abstractmethod

from src.config.settings import EngineSettings
from src.managers.report_manager import ReportManager
from src.utils.report_writer import ReportWriter


class BaseTool(ABC):
    """One command of the `odl` front end."""

    name = ""
    help = ""

    def __init__(self, settings: EngineSettings = None, out=None):
        self.settings = settings or EngineSettings()
        self.out = out or sys.stdout
        self.reports = ReportManager(self.settings.json_indent)
        self.writer = ReportWriter()

    @classmethod
    @abstractmethod
    def add_arguments(cls, parser):
        pass

    @abstractmethod
    def run(self, args) -> int:
        pass

    def emit(self, text: str):
        self.out.write(text)

    def save_json(self, text: str, target: str, prefix: str) -> str:
        if target == '-':
            self.emit(text)
            return target
        return self.writer.write(text, target, prefix)
