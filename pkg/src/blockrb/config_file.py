from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional, Union

from blockrb.validators import ConfigError


class ConfigFile:
    """A JSON file of RunConfig fields.

    The path is the one given, else the file named by BLOCKRB_CONFIG, else
    none at all, in which case the file behaves as empty.
    """

    def __init__(self, path: Optional[Union[str, Path]] = None):
        if path is None and os.environ.get("BLOCKRB_CONFIG"):
            path = os.environ["BLOCKRB_CONFIG"]
        self._config_file_path = Path(path) if path is not None else None
        self._values = self._read_config_file()

    @property
    def path(self) -> Optional[Path]:
        return self._config_file_path

    def _read_config_file(self) -> dict:
        if self._config_file_path is None:
            return {}
        try:
            with self._config_file_path.open("r") as f:
                values = json.load(f)
        except FileNotFoundError:
            raise ConfigError("config", f"file {self._config_file_path} does not exist") from None
        except json.JSONDecodeError as e:
            raise ConfigError("config", f"{self._config_file_path} is not valid JSON: {e.msg}") from None
        if not isinstance(values, dict):
            raise ConfigError("config", f"{self._config_file_path} must hold a JSON object")
        return values

    def __getitem__(self, key):
        return self._values.get(key, None)

    def __contains__(self, key) -> bool:
        return key in self._values

    def keys(self):
        return self._values.keys()

    def __len__(self):
        return len(self._values)

    def __str__(self):
        return str(self._values)

    def __repr__(self):
        return repr(self._values)
