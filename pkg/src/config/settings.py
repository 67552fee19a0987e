from dataclasses import dataclass
import json
import os

from src.errors import ConfigError


@dataclass
class EngineSettings:
    max_character_dim: int = 50000
    generic_dim: int = 9
    max_generic_dim: int = 12
    workers: int = 1
    log_level: str = "WARNING"
    json_indent: int = 2

    def save(self, path: str):
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.__dict__, f, indent=self.json_indent, ensure_ascii=False)

    @classmethod
    def load(cls, path: str) -> 'EngineSettings':
        if not path or not os.path.exists(path):
            return cls()
        with open(path, 'r', encoding='utf-8') as f:
            try:
                data = json.load(f)
                return cls(**data)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from exc
            except TypeError as exc:
                raise ConfigError(f"{path}: {exc}") from exc
