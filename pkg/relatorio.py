# -*- coding: utf-8 -*-
"""
Módulo de relatórios de experimentos - monochrome.
Junta os relatórios JSON emitidos pela CLI em tabelas CSV (uma por comando)
mais um resumo (comando, execuções, taxa de sucesso). Gráficos ficam de fora:
o CSV é a fronteira.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Union

import pandas as pd
import pytz

logger = logging.getLogger(__name__)

DEFAULT_TZ = "America/Sao_Paulo"


def fuso_relatorio():
    nome = os.getenv("MONOCHROME_TZ", DEFAULT_TZ)
    try:
        return pytz.timezone(nome)
    except pytz.UnknownTimeZoneError:
        logger.warning(f"[relatorio] MONOCHROME_TZ desconhecido ({nome}), usando {DEFAULT_TZ}")
        return pytz.timezone(DEFAULT_TZ)


def _achatar(valor: Any) -> Any:
    if isinstance(valor, (list, dict)):
        return json.dumps(valor, ensure_ascii=False, sort_keys=True)
    return valor


def payload_frame(payload: Any) -> pd.DataFrame:
    """
    Tabela de um payload: lista de objetos vira uma linha por item; objeto vira
    uma linha; escalares viram a coluna "value". Listas e objetos aninhados
    são serializados em JSON na célula.
    """
    if isinstance(payload, list):
        if payload and all(isinstance(item, dict) for item in payload):
            return pd.DataFrame([{k: _achatar(v) for k, v in item.items()} for item in payload])
        return pd.DataFrame({"value": [_achatar(v) for v in payload]})
    if isinstance(payload, dict):
        return pd.DataFrame([{k: _achatar(v) for k, v in payload.items()}])
    return pd.DataFrame({"value": [payload]})


class RelatorioExperimentos:
    def __init__(self, relatorios: List[Dict[str, Any]]):
        self.relatorios = [r for r in relatorios if isinstance(r, dict) and "command" in r]
        ignorados = len(relatorios) - len(self.relatorios)
        if ignorados:
            logger.warning(f"[relatorio] {ignorados} entradas sem campo 'command' ignoradas")
        self.fuso = fuso_relatorio()

    @classmethod
    def carregar(cls, caminhos: List[Union[str, Path]]) -> "RelatorioExperimentos":
        relatorios = []
        for caminho in caminhos:
            with open(caminho, encoding="utf-8") as fh:
                dado = json.load(fh)
            relatorios.extend(dado if isinstance(dado, list) else [dado])
        logger.info(f"[relatorio] {len(relatorios)} relatórios lidos de {len(caminhos)} arquivos")
        return cls(relatorios)

    def tabelas(self) -> Dict[str, pd.DataFrame]:
        por_comando: Dict[str, List[pd.DataFrame]] = {}
        for rel in self.relatorios:
            df = payload_frame(rel.get("payload"))
            df.insert(0, "exit_status", rel.get("exit_status"))
            df.insert(0, "timestamp", rel.get("timestamp"))
            por_comando.setdefault(rel["command"], []).append(df)
        return {
            comando: pd.concat(partes, ignore_index=True, sort=False)
            for comando, partes in sorted(por_comando.items())
        }

    def resumo(self) -> pd.DataFrame:
        if not self.relatorios:
            return pd.DataFrame(columns=["command", "runs", "success_rate", "last_run"])
        df = pd.DataFrame(
            {
                "command": [r["command"] for r in self.relatorios],
                "ok": [r.get("exit_status") == 0 for r in self.relatorios],
                "timestamp": pd.to_datetime(
                    [r.get("timestamp") for r in self.relatorios], errors="coerce", utc=True
                ),
            }
        )
        df["timestamp"] = df["timestamp"].dt.tz_convert(self.fuso)
        resumo = df.groupby("command").agg(
            runs=("ok", "size"),
            success_rate=("ok", "mean"),
            last_run=("timestamp", "max"),
        )
        resumo["success_rate"] = resumo["success_rate"].round(3)
        resumo["last_run"] = resumo["last_run"].map(lambda t: t.isoformat() if pd.notna(t) else None)
        return resumo.reset_index()

    def salvar(self, pasta: Union[str, Path]) -> List[str]:
        pasta = Path(pasta)
        pasta.mkdir(parents=True, exist_ok=True)
        escritos = []
        for comando, df in self.tabelas().items():
            destino = pasta / f"{comando}.csv"
            df.to_csv(destino, index=False, lineterminator="\n")
            escritos.append(str(destino))
        destino = pasta / "resumo.csv"
        self.resumo().to_csv(destino, index=False, lineterminator="\n")
        escritos.append(str(destino))
        logger.info(f"[relatorio] {len(escritos)} tabelas gravadas em {pasta}")
        return escritos
