"""Configuration management: reads/writes ~/.config/aci-betti/config.toml.

Oracle defaults live in an ``[oracle]`` table, the scan resume file in ``[scan]``.
Command-line flags win over ``BETTI_SEED``, which wins over the file.
"""

from __future__ import annotations

import os
import tomllib
from pathlib import Path
from typing import Any

from aci_betti.errors import InvalidInput
from aci_betti.gf import MAX_PRIME
from aci_betti.models import OracleSettings

CONFIG_DIR = Path.home() / ".config" / "aci-betti"
CONFIG_FILE = CONFIG_DIR / "config.toml"
SEED_ENV = "BETTI_SEED"

DEFAULTS: dict[str, dict[str, Any]] = {
    "oracle": {"prime": 32003, "seed": 0, "seeds": 3, "retries": 5},
    "scan": {"cursor": ""},
}


def _escape_toml(value: str) -> str:
    return value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def ensure_config_dir() -> None:
    CONFIG_DIR.mkdir(parents=True, exist_ok=True)


def load_config() -> dict:
    if not CONFIG_FILE.exists():
        return {}
    with open(CONFIG_FILE, "rb") as f:
        try:
            return tomllib.load(f)
        except tomllib.TOMLDecodeError as e:
            raise InvalidInput(f"{CONFIG_FILE}: {e}") from e


def save_config(config: dict) -> None:
    # tomllib only reads; the file is flat enough to write by hand.
    ensure_config_dir()
    lines: list[str] = []
    for section, values in config.items():
        if not isinstance(values, dict):
            continue
        lines.append(f"[{section}]")
        for k, v in values.items():
            if isinstance(v, bool):
                lines.append(f"{k} = {'true' if v else 'false'}")
            elif isinstance(v, int):
                lines.append(f"{k} = {v}")
            else:
                lines.append(f'{k} = "{_escape_toml(str(v))}"')
        lines.append("")
    CONFIG_FILE.write_text("\n".join(lines) + "\n")


def get_setting(section: str, key: str) -> Any:
    if section not in DEFAULTS or key not in DEFAULTS[section]:
        raise InvalidInput(f"unknown setting {section}.{key}")
    return load_config().get(section, {}).get(key, DEFAULTS[section][key])


def set_setting(dotted: str, raw: str) -> Any:
    """Validate and persist ``section.key = raw``. Returns the stored value."""
    section, _, key = dotted.partition(".")
    default = get_setting(section, key)
    if isinstance(default, int):
        try:
            value: Any = int(raw)
        except ValueError:
            raise InvalidInput(f"{dotted} expects an integer, got {raw!r}") from None
    else:
        value = raw
    if section == "oracle":
        _validate_oracle(**{key: value})
    config = load_config()
    config.setdefault(section, {})[key] = value
    save_config(config)
    return value


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _validate_oracle(prime: int | None = None, seed: int | None = None,
                     seeds: int | None = None, retries: int | None = None) -> None:
    if prime is not None and (not _is_prime(prime) or prime > MAX_PRIME):
        raise InvalidInput(f"prime must be a prime below 2^31, got {prime}")
    if seed is not None and seed < 0:
        raise InvalidInput(f"seed must be non-negative, got {seed}")
    if seeds is not None and seeds < 1:
        raise InvalidInput(f"seeds must be at least 1, got {seeds}")
    if retries is not None and retries < 0:
        raise InvalidInput(f"retries must be non-negative, got {retries}")


def _env_seed() -> int | None:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def load_settings(prime: int | None = None, seed: int | None = None,
                  seeds: int | None = None, retries: int | None = None) -> OracleSettings:
    stored = {**DEFAULTS["oracle"], **load_config().get("oracle", {})}
    if seed is None:
        seed = _env_seed()
    settings = OracleSettings(
        prime=stored["prime"] if prime is None else prime,
        seed=stored["seed"] if seed is None else seed,
        seeds=stored["seeds"] if seeds is None else seeds,
        retries=stored["retries"] if retries is None else retries,
    )
    _validate_oracle(settings.prime, settings.seed, settings.seeds, settings.retries)
    return settings


def cursor_path(override: str | Path | None = None) -> Path:
    if override:
        return Path(override)
    stored = get_setting("scan", "cursor")
    return Path(stored) if stored else CONFIG_DIR / "scan-cursor.json"
