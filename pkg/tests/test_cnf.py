# -*- coding: utf-8 -*-
import pytest

from conftest import Z
from services.cnf import (
    CnfDocument,
    cnf_export,
    cnf_model_decode,
    coloring_units,
    dpll_satisfiable,
    external_satisfiable,
    parse_dimacs,
    parse_model,
    var_of,
)
from services.coloring import Coloring, constant_coloring
from services.errors import CnfModelError, ParseError
from services.patterns import parse_poly_family
from services.ring_core import window_enumerate
from services.search import AvoidanceStatus, avoidance_backtrack, build_instance


def _instancia(N, r=2, F="t"):
    return build_instance(window_enumerate(Z, f"N={N}"), r, parse_poly_family(Z, F))


def test_numeracao_das_variaveis():
    assert var_of(0, 1, 2) == 1
    assert var_of(0, 2, 2) == 2
    assert var_of(2, 1, 3) == 7


def test_exportacao_n3():
    texto = cnf_export(_instancia(3)).to_dimacs()
    linhas = texto.split("\n")
    assert linhas[:3] == ["c map 1 0", "c map 2 1", "c map 3 2"]
    assert "p cnf 6 8" in linhas
    corpo = linhas[linhas.index("p cnf 6 8") + 1:]
    assert corpo == ["1 2 0", "3 4 0", "5 6 0", "-1 -2 0", "-3 -4 0", "-5 -6 0", "-3 -5 0", "-4 -6 0", ""]


def test_leitura_de_volta():
    doc = cnf_export(_instancia(9, r=3, F="0; t"))
    lido = parse_dimacs(doc.to_dimacs())
    assert lido.num_vars == doc.num_vars
    assert lido.clauses == doc.clauses


@pytest.mark.parametrize(
    "texto",
    [
        "1 2 0\n",
        "p cnf 2\n1 0\n",
        "p cnf 2 1\n1 x 0\n",
        "p cnf 2 1\n3 0\n",
        "p cnf 2 1\n1 2\n",
        "p cnf 2 2\n1 0\n",
        "c só comentário\n",
    ],
)
def test_dimacs_invalido(texto):
    with pytest.raises(ParseError):
        parse_dimacs(texto)


def test_decodifica_modelo():
    inst = _instancia(3)
    cores = decodifica(inst, "v 1 -2 -3 4 5 -6 0\n")
    assert cores.as_list() == [1, 2, 1]


def decodifica(inst, texto):
    return cnf_model_decode(parse_model(texto), inst)


def test_modelo_uma_por_linha():
    assert parse_model("c solver\ns SATISFIABLE\n1\n-2\n0\n") == [1, -2]


def test_modelo_insatisfativel():
    with pytest.raises(CnfModelError):
        parse_model("s UNSATISFIABLE\n")


def test_modelo_com_duas_cores():
    inst = _instancia(3)
    with pytest.raises(CnfModelError):
        decodifica(inst, "1 2 -3 4 5 -6")


def test_modelo_sem_cor():
    inst = _instancia(3)
    with pytest.raises(CnfModelError):
        decodifica(inst, "-1 -2 -3 4 5 -6")


def test_modelo_monocromatico():
    inst = _instancia(3)
    with pytest.raises(CnfModelError):
        decodifica(inst, "1 -2 3 -4 5 -6")


def test_unidades_fixam_a_coloracao():
    inst = _instancia(7)
    result = avoidance_backtrack(inst)
    assert result.status is AvoidanceStatus.FOUND
    doc = cnf_export(inst).with_units(coloring_units(result.coloring))
    modelo = dpll_satisfiable(doc)
    assert modelo is not None
    assert cnf_model_decode(modelo, inst) == result.coloring


def test_unidades_de_coloracao_invalida():
    inst = _instancia(6)
    doc = cnf_export(inst).with_units(coloring_units(constant_coloring(inst.window, 2)))
    assert dpll_satisfiable(doc) is None


def test_dpll_clausula_vazia():
    assert dpll_satisfiable(CnfDocument(1, [()])) is None
    assert dpll_satisfiable(CnfDocument(2, [])) == [-1, -2]


def test_forcado_e_insatisfativel():
    doc = cnf_export(_instancia(8))
    assert dpll_satisfiable(doc) is None
    sat, modelo, motor = external_satisfiable(doc)
    assert not sat and modelo is None
    assert motor in ("cadical195", "dpll")


def test_solver_externo_devolve_modelo_decodificavel():
    inst = _instancia(7, r=3, F="0; t")
    sat, modelo, _ = external_satisfiable(cnf_export(inst))
    assert sat
    c = cnf_model_decode(modelo, inst)
    assert isinstance(c, Coloring)
