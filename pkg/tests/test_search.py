# -*- coding: utf-8 -*-
import itertools

import pytest

from conftest import GF2, Z
from services.cnf import cnf_export, dpll_satisfiable
from services.coloring import Coloring, constant_coloring
from services.errors import InvalidParams, SpecMismatch
from services.patterns import ScanConstraints, parse_poly_family
from services.ring_core import format_element, window_enumerate
from services.search import (
    FINITE_ANALOGUE_LABEL,
    AvoidanceStatus,
    avoidance_backtrack,
    build_instance,
    moreira_number,
    validate_avoidance,
    variable_order,
)


def _instancia(N, r=2, F="t", constraints=None):
    window = window_enumerate(Z, f"N={N}")
    family = parse_poly_family(Z, F)
    if constraints is None:
        return build_instance(window, r, family)
    return build_instance(window, r, family, constraints)


def _conjuntos(inst):
    return [sorted(e.value for e in inst.candidate_elements(k)) for k in range(len(inst.candidates))]


# ============================================================
# INSTÂNCIAS
# ============================================================

def test_candidatos_de_exemplo():
    assert _conjuntos(_instancia(3)) == [[2, 3]]
    assert _conjuntos(_instancia(4)) == [[2, 3], [3, 4]]
    assert _instancia(1).candidates == ()


def test_candidatos_sem_repeticao():
    inst = _instancia(30, F="0; t")
    chaves = [frozenset(c) for c in inst.candidates]
    assert len(chaves) == len(set(chaves))


def test_candidatos_truncados():
    k = ScanConstraints(require_in_window=False)
    inst = _instancia(5, F="0; t", constraints=k)
    assert [2, 5] in _conjuntos(inst)


def test_instancia_de_aneis_diferentes():
    with pytest.raises(SpecMismatch):
        build_instance(window_enumerate(Z, "N=5"), 2, parse_poly_family(GF2, "t"))
    with pytest.raises(InvalidParams):
        _instancia(5, r=0)


def test_ordem_das_variaveis():
    inst = _instancia(4)
    assert variable_order(inst) == [2, 1, 3]


# ============================================================
# BACKTRACKING
# ============================================================

def test_sem_candidatos_qualquer_coloracao_serve():
    result = avoidance_backtrack(_instancia(2))
    assert result.status is AvoidanceStatus.FOUND
    assert result.coloring.as_list() == [1, 1]


def test_uma_cor_e_forcada():
    result = avoidance_backtrack(_instancia(3, r=1))
    assert result.status is AvoidanceStatus.FORCED
    assert result.coloring is None


def test_teto_zero_da_timeout():
    result = avoidance_backtrack(_instancia(10), budget=0)
    assert result.status is AvoidanceStatus.TIMEOUT
    assert result.as_dict()["status"] == "timeout"


def test_coloracao_encontrada_e_valida():
    inst = _instancia(7)
    result = avoidance_backtrack(inst)
    assert result.status is AvoidanceStatus.FOUND
    assert validate_avoidance(inst, result.coloring)
    saida = result.as_dict()
    assert saida["status"] == "avoidance_found"
    assert set(saida["coloring"]) == {format_element(e) for e in inst.window}


def test_coloracao_monocromatica_nao_valida():
    inst = _instancia(6)
    assert not validate_avoidance(inst, constant_coloring(inst.window, 2))


def _forca_bruta(inst):
    for cores in itertools.product(range(1, inst.r + 1), repeat=inst.size):
        if validate_avoidance(inst, Coloring(inst.window, inst.r, list(cores))):
            return True
    return False


@pytest.mark.parametrize("F", ["t", "0; t", "t^2"])
def test_backtracking_igual_a_forca_bruta(F):
    for N in range(1, 12):
        inst = _instancia(N, r=2, F=F)
        result = avoidance_backtrack(inst)
        assert (result.status is AvoidanceStatus.FOUND) == _forca_bruta(inst), N


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("F", ["t", "0; t", "t^2"])
def test_motores_concordam(r, F):
    for N in range(1, 13):
        inst = _instancia(N, r=r, F=F)
        result = avoidance_backtrack(inst)
        modelo = dpll_satisfiable(cnf_export(inst))
        assert (result.status is AvoidanceStatus.FOUND) == (modelo is not None), N


def test_busca_paralela_igual_serial():
    for N in (8, 12, 20):
        inst = _instancia(N, r=3, F="0; t")
        serial = avoidance_backtrack(inst)
        paralela = avoidance_backtrack(inst, jobs=3)
        assert paralela.status is serial.status
        assert paralela.stats.branches == 3
        if paralela.coloring is not None:
            assert validate_avoidance(inst, paralela.coloring)


# ============================================================
# NÚMERO DE MOREIRA (análogo finito)
# ============================================================

def test_moreira_uma_cor():
    result = moreira_number(1, parse_poly_family(Z, "t"), 50)
    assert result.status == "found"
    assert result.N == 3
    assert result.as_dict()["notion"] == FINITE_ANALOGUE_LABEL


def test_moreira_duas_cores():
    # {2,3,...,N} vira um caminho pelas arestas {y, y+1}; {8, 6} fecha um ciclo ímpar
    result = moreira_number(2, parse_poly_family(Z, "t"), 50)
    assert result.status == "found"
    assert result.N == 8


def test_moreira_busca_binaria_sonda_vizinhos():
    result = moreira_number(1, parse_poly_family(Z, "t"), 50)
    sondados = {p.N: p.status for p in result.probes}
    assert sondados[2] is AvoidanceStatus.FOUND
    assert sondados[3] is AvoidanceStatus.FORCED


def test_moreira_nao_encontrado_ate_max():
    result = moreira_number(2, parse_poly_family(Z, "t"), 4)
    assert result.status == "not_found"
    assert result.N is None


def test_moreira_inconclusivo():
    result = moreira_number(2, parse_poly_family(Z, "t"), 40, budget=0)
    assert result.status == "inconclusive"


def test_moreira_so_em_z():
    with pytest.raises(InvalidParams):
        moreira_number(2, parse_poly_family(GF2, "t"), 10)


@pytest.mark.parametrize("F, esperado", [("t", 8), ("0; t", 15)])
def test_moreira_com_checagem_cruzada(F, esperado):
    result = moreira_number(2, parse_poly_family(Z, F), 64, cross_check=True)
    assert result.status == "found"
    assert result.N == esperado
    assert result.engines_agree is True
    assert all(p.engine in ("cadical195", "dpll") for p in result.probes)


def test_moreira_limite_abaixo_do_valor():
    result = moreira_number(2, parse_poly_family(Z, "0; t"), 12, cross_check=True)
    assert result.status == "not_found"
    assert result.engines_agree is True
