# -*- coding: utf-8 -*-
"""
services/run_config.py
Manifesto de experimento: arquivo texto `chave = valor` espelhando as flags da
CLI. Flags têm precedência sobre o arquivo; o teto de trabalho cai em
MONOCHROME_BUDGET e depois no padrão.
"""
import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

from services.errors import ParseError

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 5_000_000
FORMATS = ("json", "csv", "text")


def env_budget(default: int = DEFAULT_BUDGET) -> int:
    raw = os.getenv("MONOCHROME_BUDGET")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"[config] MONOCHROME_BUDGET inválido ({raw!r}), usando {default}")
        return default


def _as_bool(key: str, raw: str) -> bool:
    value = raw.strip().lower()
    if value in ("1", "true", "sim", "yes", "on"):
        return True
    if value in ("0", "false", "nao", "não", "no", "off"):
        return False
    raise ParseError(f"valor booleano inválido para '{key}'", raw)


def _as_int(key: str, raw: str) -> int:
    try:
        return int(raw.strip())
    except ValueError:
        raise ParseError(f"valor inteiro inválido para '{key}'", raw) from None


@dataclass(frozen=True)
class RunConfig:
    ring: Optional[str] = None
    window: Optional[str] = None
    colors: Optional[int] = None
    F: Optional[str] = None
    exclude_y: Optional[str] = None
    exclude_x: Optional[str] = None
    require_in_window: Optional[bool] = None
    forbid_degenerate: Optional[bool] = None
    seed: Optional[int] = None
    budget: Optional[int] = None
    format: Optional[str] = None
    jobs: Optional[int] = None
    coloring: Optional[str] = None

    def merged(self, overrides: Dict[str, Any]) -> "RunConfig":
        """Valores não nulos de `overrides` (flags) vencem os do arquivo."""
        known = {f.name for f in fields(self)}
        picked = {k: v for k, v in overrides.items() if k in known and v is not None}
        return replace(self, **picked)

    def effective_budget(self) -> int:
        return self.budget if self.budget is not None else env_budget()

    def effective_format(self) -> str:
        return self.format or "json"


_INT_KEYS = {"colors", "seed", "budget", "jobs"}
_BOOL_KEYS = {"require_in_window", "forbid_degenerate"}


def parse_run_config(text: str) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    values: Dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"linha {lineno} sem '='", raw.strip())
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise ParseError("chave desconhecida no arquivo de configuração", key)
        if key in _INT_KEYS:
            values[key] = _as_int(key, value)
        elif key in _BOOL_KEYS:
            values[key] = _as_bool(key, value)
        else:
            values[key] = value
    fmt = values.get("format")
    if fmt is not None and fmt not in FORMATS:
        raise ParseError("formato de saída inválido", fmt)
    return RunConfig(**values)


def load_run_config(path) -> RunConfig:
    cfg = parse_run_config(Path(path).read_text(encoding="utf-8"))
    logger.debug(f"[config] manifesto carregado de {path}")
    return cfg
