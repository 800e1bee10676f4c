"""
Configuration management

Single loader for the numeric defaults table shipped with the package.
"""

import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml


class Config:
    """
    Configuration manager

    Singleton; every module reads its defaults through it.
    """

    _instance: Optional["Config"] = None
    _config: Dict[str, Any] = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not self._config:
            self.load_config()

    def load_config(self, config_path: Optional[str] = None) -> None:
        """
        Load the defaults table

        Args:
            config_path: YAML file, defaults to bergoplab/configs/defaults.yaml
        """
        if config_path is None:
            package_root = Path(__file__).parent.parent
            config_path = package_root / "configs" / "defaults.yaml"

        config_path = Path(config_path)

        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        with open(config_path, "r", encoding="utf-8") as f:
            self._config = yaml.safe_load(f) or {}

        self._apply_env_overrides()

    def _apply_env_overrides(self) -> None:
        """
        Apply environment overrides

        Supported variables:
        - BERGOPLAB_THREADS
        - BERGOPLAB_LOG_LEVEL
        - BERGOPLAB_SEED
        """
        env_mappings = {
            "BERGOPLAB_THREADS": (["runtime", "threads"], int),
            "BERGOPLAB_LOG_LEVEL": (["logging", "level"], str),
            "BERGOPLAB_SEED": (["criteria", "seed"], int),
        }

        for env_var, (config_path, cast) in env_mappings.items():
            value = os.getenv(env_var)
            if value:
                self._set_nested(config_path, cast(value))

    def _set_nested(self, path: list, value: Any) -> None:
        current = self._config
        for key in path[:-1]:
            current = current.setdefault(key, {})
        current[path[-1]] = value

    def get(self, *keys: str, default: Any = None) -> Any:
        """
        Nested lookup

        Examples:
            >>> Config().get("operators", "truncation")
            200
            >>> Config().get("nonexistent", default=3)
            3
        """
        current = self._config

        try:
            for key in keys:
                current = current[key]
            return current
        except (KeyError, TypeError):
            return default

    def set(self, *keys: str, value: Any) -> None:
        if len(keys) == 0:
            raise ValueError("at least one key is required")

        current = self._config
        for key in keys[:-1]:
            current = current.setdefault(key, {})
        current[keys[-1]] = value

    @property
    def all(self) -> Dict[str, Any]:
        return self._config.copy()

    # ========================================
    # Convenience accessors
    # ========================================

    @property
    def boundary_epsilon(self) -> float:
        return float(self.get("geometry", "boundary_epsilon", default=1e-12))

    @property
    def radial_count(self) -> int:
        return int(self.get("quadrature", "radial_count", default=96))

    @property
    def angular_count(self) -> int:
        return int(self.get("quadrature", "angular_count", default=512))

    @property
    def truncation(self) -> int:
        """Default operator truncation order M"""
        return int(self.get("operators", "truncation", default=200))

    @property
    def guard(self) -> int:
        return int(self.get("operators", "guard", default=64))

    @property
    def profile_radii(self) -> List[float]:
        return [float(r) for r in self.get("operators", "profile_radii", default=[0.5, 0.9, 0.99])]

    @property
    def tol_vanish(self) -> float:
        return float(self.get("operators", "tol_vanish", default=1e-2))

    @property
    def bracket_bound(self) -> float:
        return float(self.get("spaces", "bracket_bound", default=50.0))

    @property
    def carleson_radius(self) -> float:
        return float(self.get("carleson", "radius", default=1.0))

    @property
    def tail_divergence(self) -> float:
        return float(self.get("quadrature", "tail_divergence", default=0.15))

    @property
    def seed(self) -> int:
        return int(self.get("criteria", "seed", default=7))

    @property
    def threads(self) -> int:
        return max(1, int(self.get("runtime", "threads", default=1)))


# Global instance
config = Config()


def get_config(*keys: str, default: Any = None) -> Any:
    return config.get(*keys, default=default)


def reload_config(config_path: Optional[str] = None) -> None:
    config.load_config(config_path)
