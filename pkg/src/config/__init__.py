from .settings import EngineSettings
from .run_config import RunConfig, load_config, parse_config, serialize

__all__ = ['EngineSettings', 'RunConfig', 'load_config', 'parse_config', 'serialize']
