from .config import BackendConfig, Config, ConfigError, ServerConfig
from .api import create_app
from .core import Engine
from .store import SessionStore, UnknownSession

__all__ = [
    "BackendConfig",
    "Config",
    "ConfigError",
    "Engine",
    "create_app",
    "ServerConfig",
    "SessionStore",
    "UnknownSession",
]
