from .config import EngineConfig, load_config, log_level
from .main import build_parser, main, run_command

__all__ = ['EngineConfig', 'load_config', 'log_level', 'build_parser', 'main', 'run_command']
