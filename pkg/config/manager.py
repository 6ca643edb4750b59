import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

from .schema import LimitsSettings, OracleLimits

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_DIR = "~/.layered_decomp"
CONFIG_VERSION = "1.0.0"

SOURCE_DEFAULT = "default"
SOURCE_FILE = "file"
SOURCE_ENV = "env"
SOURCE_FLAG = "flag"


class ConfigManager:
    """Resolves oracle limits for the layered decomposition toolkit.

    Later sources win: built-in defaults, the JSON config file, the
    ``LAYERED_DECOMP_LIMITS`` environment variable (or ``.env``), CLI flags.
    """

    def __init__(self, config_dir: Optional[str] = None):
        """Initialize the configuration manager.

        Args:
            config_dir: Path to the configuration directory; created on first save
        """
        if config_dir is None:
            config_dir = os.path.expanduser(DEFAULT_CONFIG_DIR)

        self.config_dir = Path(config_dir)
        self.config_file = self.config_dir / "config.json"
        self.default_config: Dict[str, Any] = {
            "version": CONFIG_VERSION,
            "limits": OracleLimits().model_dump(),
        }
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        if not self.config_file.exists():
            return self._defaults()
        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                config = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Failed to load configuration from {self.config_file}: {e}")
            return self._defaults()
        if not isinstance(config, dict):
            logger.error(f"Configuration in {self.config_file} is not a JSON object")
            return self._defaults()
        if self._needs_update(config):
            logger.warning("Configuration needs to be updated")
            config = self._update_config(config)
        return config

    def _defaults(self) -> Dict[str, Any]:
        return json.loads(json.dumps(self.default_config))

    def _needs_update(self, config: Dict[str, Any]) -> bool:
        if config.get("version") != CONFIG_VERSION:
            return True
        return any(key not in config for key in self.default_config)

    def _update_config(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Keep the file's limits, fill everything else from the defaults."""
        updated = self._defaults()
        limits = config.get("limits")
        if isinstance(limits, dict):
            updated["limits"] = dict(limits)
        return updated

    def _save_config(self, config: Dict[str, Any]) -> None:
        self.config_dir.mkdir(parents=True, exist_ok=True)
        with open(self.config_file, "w", encoding="utf-8") as f:
            json.dump(config, f, indent=2, sort_keys=True)
            f.write("\n")
        logger.info(f"Configuration saved to {self.config_file}")

    def _file_limits(self) -> Dict[str, Any]:
        """Limits the config file sets explicitly; defaults written by ``init`` count too."""
        if not self.config_file.exists():
            return {}
        limits = self.config.get("limits")
        return dict(limits) if isinstance(limits, dict) else {}

    @staticmethod
    def _env_limits() -> Dict[str, Any]:
        return dict(LimitsSettings().limits or {})

    def resolve(self, overrides: Optional[Mapping[str, Optional[int]]] = None) -> Tuple[OracleLimits, Dict[str, str]]:
        """Effective limits and the source that set each one.

        Args:
            overrides: CLI flag values keyed by limit name; None means unset

        Returns:
            The validated limits and a ``{limit: source}`` mapping

        Raises:
            pydantic.ValidationError: If a source names an unknown limit or a non-positive value
        """
        values: Dict[str, Any] = OracleLimits().model_dump()
        sources = {name: SOURCE_DEFAULT for name in values}
        layers = [
            (SOURCE_FILE, self._file_limits()),
            (SOURCE_ENV, self._env_limits()),
            (SOURCE_FLAG, {k: v for k, v in (overrides or {}).items() if v is not None}),
        ]
        for source, layer in layers:
            for name, value in layer.items():
                values[name] = value
                sources[name] = source
        limits = OracleLimits(**values)
        logger.debug(f"Resolved limits {limits.model_dump()} from {sources}")
        return limits, sources

    def limits(self, overrides: Optional[Mapping[str, Optional[int]]] = None) -> OracleLimits:
        return self.resolve(overrides)[0]

    def show_rows(self) -> List[Tuple[str, str, str]]:
        """``(limit, value, source)`` rows for ``config show``."""
        limits, sources = self.resolve()
        return [(name, str(value), sources[name]) for name, value in limits.model_dump().items()]

    def init_config(self, force: bool = False) -> bool:
        """Write the default config file.

        Returns:
            True if a file was written, False if one already existed and force is off
        """
        if self.config_file.exists() and not force:
            logger.info(f"Configuration already exists at {self.config_file}")
            return False
        self.config = self._defaults()
        self._save_config(self.config)
        return True

    def reset_config(self) -> None:
        """Overwrite the config file with the default values."""
        self.config = self._defaults()
        self._save_config(self.config)
        logger.info("Configuration reset successfully")
