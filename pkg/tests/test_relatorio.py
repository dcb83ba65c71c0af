# -*- coding: utf-8 -*-
import json

import pandas as pd

from relatorio import RelatorioExperimentos, payload_frame


def _relatorios():
    return [
        {
            "command": "hj",
            "argv": ["hj", "--colors", "2"],
            "timestamp": "2026-01-15T10:00:00-03:00",
            "exit_status": 0,
            "payload": {"r": 2, "t": 2, "N": 2, "status": "found", "avoiding_coloring": {"1": 1, "2": 2}},
        },
        {
            "command": "hj",
            "argv": ["hj", "--colors", "2"],
            "timestamp": "2026-01-16T10:00:00-03:00",
            "exit_status": 1,
            "payload": {"r": 2, "t": 3, "N": 1, "status": "not_found"},
        },
        {
            "command": "scan",
            "argv": ["scan"],
            "timestamp": "2026-01-15T12:00:00-03:00",
            "exit_status": 0,
            "payload": [
                {"x": "1", "y": "2", "color": 1, "elements": ["2", "3"]},
                {"x": "2", "y": "3", "color": 2, "elements": ["6", "5"]},
            ],
        },
    ]


def test_payload_em_tabela():
    df = payload_frame([{"x": "1", "elements": ["2", "3"]}])
    assert df.loc[0, "elements"] == '["2", "3"]'
    assert list(payload_frame(["a", "b"])["value"]) == ["a", "b"]
    assert payload_frame(7)["value"].item() == 7


def test_tabelas_por_comando():
    tabelas = RelatorioExperimentos(_relatorios()).tabelas()
    assert sorted(tabelas) == ["hj", "scan"]
    assert len(tabelas["hj"]) == 2
    assert len(tabelas["scan"]) == 2
    assert list(tabelas["hj"].columns[:2]) == ["timestamp", "exit_status"]
    assert list(tabelas["hj"]["status"]) == ["found", "not_found"]


def test_resumo_exato():
    resumo = RelatorioExperimentos(_relatorios()).resumo().set_index("command")
    assert resumo.loc["hj", "runs"] == 2
    assert resumo.loc["hj", "success_rate"] == 0.5
    assert resumo.loc["scan", "success_rate"] == 1.0
    assert resumo.loc["hj", "last_run"].startswith("2026-01-16T10:00:00")


def test_entradas_sem_comando_ignoradas():
    rel = RelatorioExperimentos(_relatorios() + [{"payload": 1}, "lixo"])
    assert len(rel.relatorios) == 3


def test_resumo_vazio():
    assert list(RelatorioExperimentos([]).resumo().columns) == ["command", "runs", "success_rate", "last_run"]


def test_salvar_csv(tmp_path):
    entrada = tmp_path / "execucoes.json"
    entrada.write_text(json.dumps(_relatorios()), encoding="utf-8")
    avulso = tmp_path / "avulso.json"
    avulso.write_text(json.dumps(_relatorios()[0]), encoding="utf-8")

    rel = RelatorioExperimentos.carregar([entrada, avulso])
    escritos = rel.salvar(tmp_path / "saida")

    assert sorted(p.split("/")[-1] for p in escritos) == ["hj.csv", "resumo.csv", "scan.csv"]
    hj = pd.read_csv(tmp_path / "saida" / "hj.csv")
    assert len(hj) == 3
    conteudo = (tmp_path / "saida" / "resumo.csv").read_bytes()
    assert b"\r\n" not in conteudo
