# -*- coding: utf-8 -*-
import io
import json

import pytest

import main
from conftest import Z
from services.coloring import load_coloring, random_coloring
from services.patterns import parse_poly_family, witness_scan
from services.ring_core import window_enumerate


def _roda(*argv):
    out = io.StringIO()
    code = main.run(list(argv), stdout=out)
    texto = out.getvalue()
    return code, (json.loads(texto) if texto and texto.lstrip().startswith("{") else texto)


def test_scan_igual_a_biblioteca():
    code, rel = _roda("scan", "--ring", "Z", "--window", "N=50", "--colors", "2", "--seed", "7", "--F", "t")
    assert code == 0
    assert rel["command"] == "scan"
    assert rel["exit_status"] == 0
    c = random_coloring(window_enumerate(Z, "N=50"), 2, seed=7)
    esperado = [w.as_dict() for w in witness_scan(c, parse_poly_family(Z, "t"))]
    assert rel["payload"] == esperado


def test_envelope_do_relatorio():
    code, rel = _roda("hj", "--colors", "2", "--alphabet", "2", "--maxN", "3")
    assert code == 0
    assert set(rel) == {"command", "argv", "timestamp", "exit_status", "payload"}
    assert rel["argv"] == ["hj", "--colors", "2", "--alphabet", "2", "--maxN", "3"]
    assert rel["timestamp"].endswith("-03:00")
    assert rel["payload"]["N"] == 2
    assert rel["payload"]["status"] == "found"


def test_hj_nao_encontrado_sai_com_1():
    code, rel = _roda("hj", "--colors", "2", "--alphabet", "3", "--maxN", "1")
    assert code == 1
    assert rel["payload"]["status"] == "not_found"


def test_hj_estouro_de_teto_sai_com_1():
    code, _ = _roda("hj", "--colors", "2", "--alphabet", "3", "--maxN", "3")
    assert code == 1


def test_cnf_export_em_arquivo(tmp_path):
    destino = tmp_path / "out.cnf"
    code, rel = _roda("cnf", "export", "--ring", "Z", "--window", "N=3", "--colors", "2", "--F", "t", "-o", str(destino))
    assert code == 0
    assert "p cnf 6 8" in destino.read_text(encoding="utf-8").splitlines()
    assert rel["payload"]["vars"] == 6
    assert rel["payload"]["clauses"] == 8
    assert "dimacs" not in rel["payload"]


def test_cnf_export_no_relatorio():
    code, rel = _roda("cnf", "export", "--window", "N=3", "--colors", "2", "--F", "t")
    assert code == 0
    assert "p cnf 6 8" in rel["payload"]["dimacs"]


def test_cnf_decode(tmp_path):
    modelo = tmp_path / "modelo.txt"
    modelo.write_text("s SATISFIABLE\nv 1 -2 -3 4 5 -6 0\n", encoding="utf-8")
    code, rel = _roda("cnf", "decode", "--window", "N=3", "--colors", "2", "--F", "t", "--model", str(modelo))
    assert code == 0
    assert rel["payload"]["coloring"] == {"1": 1, "2": 2, "3": 1}


def test_cnf_decode_modelo_invalido(tmp_path):
    modelo = tmp_path / "modelo.txt"
    modelo.write_text("1 -2 3 -4 5 -6\n", encoding="utf-8")
    code, _ = _roda("cnf", "decode", "--window", "N=3", "--colors", "2", "--F", "t", "--model", str(modelo))
    assert code == 1


def test_coloring_generate_e_scan_do_arquivo(tmp_path):
    destino = tmp_path / "cor.txt"
    code, _ = _roda("coloring", "generate", "--window", "N=30", "--colors", "3", "--seed", "4", "-o", str(destino))
    assert code == 0
    assert load_coloring(destino) == random_coloring(window_enumerate(Z, "N=30"), 3, seed=4)
    code, rel = _roda("scan", "--coloring", str(destino), "--F", "0; t", "--limit", "2")
    assert code in (0, 1)
    assert len(rel["payload"]) <= 2


def test_scan_vazio_sai_com_1():
    code, rel = _roda("scan", "--window", "N=2", "--colors", "2", "--F", "t")
    assert code == 1
    assert rel["payload"] == []


def test_abundance_perfil():
    code, rel = _roda("abundance", "--window", "N=100", "--colors", "1", "--F", "t", "--y", "2")
    assert code == 0
    assert rel["payload"] == [{"y": "2", "color": 1, "count": 50}]


def test_largeness_syndetic():
    code, rel = _roda("largeness", "syndetic", "--window", "N=10", "--A", "{1,2,3,4,5}", "--G", "0")
    assert code == 1
    assert rel["payload"] == {"holds": False, "counterexample": "6"}


def test_largeness_transport():
    code, rel = _roda(
        "largeness", "transport", "--window", "N=20", "--A", "evens",
        "--G", "0,1", "--B", "1,2,3,4,5", "--anchor", "1", "--dilate", "3",
    )
    assert code == 0
    assert rel["payload"]["transported"] == {"gaps": ["0", "3"], "block": ["12", "15", "3", "6", "9"], "anchor": "3"}
    assert rel["payload"]["valid_after"] is True


def test_largeness_ipstar_contraexemplo():
    code, rel = _roda("largeness", "ipstar", "--window", "N=100", "--A", "odds", "--seq-len", "1", "--samples", "50")
    assert code == 1
    assert rel["payload"]["status"] == "counterexample"


def test_sigma_identidade():
    code, rel = _roda("sigma", "--ring", "Z", "--F", "2t", "--N", "2", "--y", "3,5", "--u", "2,2", "--gamma", "2")
    assert code == 0
    assert rel["payload"]["sigma_u"] == "16"
    assert rel["payload"]["s"] == "6"
    assert rel["payload"]["holds"] is True


def test_search_moreira():
    code, rel = _roda("search", "moreira", "--colors", "2", "--F", "t", "--maxN", "50")
    assert code == 0
    assert rel["payload"]["N"] == 8


def test_search_avoid_grava_coloracao(tmp_path):
    destino = tmp_path / "evita.txt"
    code, rel = _roda("search", "avoid", "--window", "N=7", "--colors", "2", "--F", "t", "-o", str(destino))
    assert code == 0
    assert rel["payload"]["status"] == "avoidance_found"
    assert load_coloring(destino).r == 2


def test_search_avoid_forcado_sai_com_1(tmp_path):
    destino = tmp_path / "evita.txt"
    code, rel = _roda("search", "avoid", "--window", "N=8", "--colors", "2", "--F", "t", "-o", str(destino))
    assert code == 1
    assert rel["exit_status"] == 1
    assert rel["payload"]["status"] == "forced"
    assert not destino.exists()


def test_search_timeout_sai_com_1():
    code, rel = _roda("search", "avoid", "--window", "N=10", "--colors", "2", "--F", "t", "--budget", "0")
    assert code == 1
    assert rel["payload"]["status"] == "timeout"


def test_ufp_subcomandos():
    assert _roda("ufp", "verify", "--seq", "2,3")[0] == 0
    code, rel = _roda("ufp", "verify", "--seq", "2,2")
    assert code == 1
    assert rel["payload"]["violation"] == {"H": [1], "K": [2], "product": "2"}
    assert _roda("ufp", "exclusion", "--B", "{2,3,6}")[1]["payload"] == ["2", "3", "6"]
    code, rel = _roda("ufp", "grow", "--window", "N=100", "--start", "2", "--m", "3")
    assert rel["payload"] == ["2", "3", "4"]


def test_ufp_pool_esgotado_sai_com_1():
    code, _ = _roda("ufp", "grow", "--window", "N=4", "--start", "2", "--m", "5")
    assert code == 1


def test_formato_csv():
    code, texto = _roda("ufp", "blocks", "--seq", "2,3,5,7", "--cuts", "1,3,4", "--format", "csv")
    assert code == 0
    assert texto.splitlines()[0] == "cuts,blocks,injective"


def test_config_com_flags(tmp_path):
    manifesto = tmp_path / "exp.cfg"
    manifesto.write_text("window = N=3\ncolors = 2\nF = t\nformat = text\n", encoding="utf-8")
    code, texto = _roda("cnf", "export", "--config", str(manifesto), "--window", "N=4")
    assert code == 0
    assert texto.startswith("# cnf (")
    assert "p cnf 8 " in texto


@pytest.mark.parametrize(
    "argv",
    [
        ["scan", "--ring", "GF(4)[x]", "--window", "d=2", "--colors", "2", "--F", "t"],
        ["scan", "--window", "N=10", "--colors", "2"],
        ["inexistente"],
        ["hj", "--colors", "2"],
        ["scan", "--window", "B=3", "--colors", "2", "--F", "t"],
    ],
)
def test_erros_de_uso_saem_com_2(argv):
    code, texto = _roda(*argv)
    assert code == 2
    assert texto == ""


def test_ajuda_sai_com_0(capsys):
    assert main.run(["--help"], stdout=io.StringIO()) == 0
