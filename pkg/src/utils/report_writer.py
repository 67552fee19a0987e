import os
from datetime import datetime


class ReportWriter:
    """Writes rendered reports to disk; a directory target gets a timestamped file name."""

    def __init__(self, save_path=None):
        if save_path is None:
            save_path = os.path.join(os.getcwd(), "reports")
        self.save_path = save_path

    def _ensure_directory(self, directory):
        if directory and not os.path.exists(directory):
            os.makedirs(directory)

    def resolve(self, target=None, prefix="report"):
        if target is None or os.path.isdir(target):
            directory = target or self.save_path
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            return os.path.join(directory, f"{prefix}_{timestamp}.json")
        return target

    def write(self, text, target=None, prefix="report"):
        filepath = self.resolve(target, prefix)
        self._ensure_directory(os.path.dirname(filepath))
        with open(filepath, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        return filepath
