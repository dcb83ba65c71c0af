# -*- coding: utf-8 -*-
import pytest

from conftest import GF2, GF3, ZI, Z
from services.errors import InvalidParams, NotDivisible, ParseError, SpecMismatch
from services.ring_core import (
    RingKind,
    RingSpec,
    exact_divide,
    format_element,
    parse_element,
    parse_ring_spec,
    parse_window_params,
    random_element,
    ring_arith,
    window_enumerate,
)


def test_exemplos_de_aritmetica():
    assert ring_arith("add", Z.element(2), Z.element(3)) == Z.element(5)
    x1 = parse_element(GF2, "x+1")
    assert ring_arith("add", x1, x1).is_zero()
    assert ring_arith("mul", parse_element(ZI, "1+i"), parse_element(ZI, "1-i")) == ZI.element(2)
    assert ring_arith("sub", Z.element(2), Z.element(5)) == Z.element(-3)
    assert ring_arith("neg", parse_element(GF3, "x+1")) == parse_element(GF3, "2x+2")


def test_aritmetica_entre_aneis_diferentes_falha():
    with pytest.raises(SpecMismatch):
        Z.element(1) + ZI.element(1)


def test_divisao_exata():
    assert exact_divide(Z.element(6), Z.element(3)) == Z.element(2)
    with pytest.raises(NotDivisible):
        exact_divide(Z.element(7), Z.element(3))
    assert exact_divide(parse_element(GF2, "x^2+x"), parse_element(GF2, "x")) == parse_element(GF2, "x+1")
    assert exact_divide(ZI.element(2), parse_element(ZI, "1+i")) == parse_element(ZI, "1-i")
    with pytest.raises(InvalidParams):
        exact_divide(Z.element(1), Z.zero)


def test_janelas_canonicas():
    assert [format_element(e) for e in window_enumerate(Z, "N=5")] == ["1", "2", "3", "4", "5"]
    assert [format_element(e) for e in window_enumerate(GF2, "d=2")] == ["0", "1", "x", "x+1"]
    gauss = window_enumerate(ZI, "B=1")
    assert len(gauss) == 9
    assert gauss.elements[0].is_zero()
    assert [format_element(e) for e in window_enumerate(Z, "N=2,signed")] == ["-2", "-1", "0", "1", "2"]


def test_tamanho_das_janelas():
    assert len(window_enumerate(Z, "N=17")) == 17
    assert len(window_enumerate(ZI, "B=3")) == 49
    assert len(window_enumerate(GF3, "d=3")) == 27


def test_parametros_de_janela_invalidos():
    with pytest.raises(InvalidParams):
        window_enumerate(Z, "N=0")
    with pytest.raises(InvalidParams):
        window_enumerate(Z, "B=2")
    with pytest.raises(ParseError):
        parse_window_params("K=3")
    with pytest.raises(ParseError):
        parse_window_params("B=2,signed")


def test_indice_inverte_posicao(spec):
    params = {RingKind.INTEGERS: "N=30", RingKind.GAUSSIAN: "B=3", RingKind.POLY: "d=3"}[spec.kind]
    window = window_enumerate(spec, params)
    for k, e in enumerate(window.elements):
        assert window.index[e] == k
        assert window.position(e) == k


def test_parse_ring_spec():
    assert parse_ring_spec("Z") == Z
    assert parse_ring_spec("Zi") == ZI
    assert parse_ring_spec("GF(3)[x]") == GF3
    with pytest.raises(ParseError) as exc:
        parse_ring_spec("GF(4)[x]")
    assert exc.value.token == "GF(4)[x]"
    with pytest.raises(ParseError):
        parse_ring_spec("Q")
    with pytest.raises(InvalidParams):
        RingSpec(RingKind.INTEGERS, 5)


@pytest.mark.parametrize(
    "ring, literal",
    [
        (Z, "-12"),
        (ZI, "3"),
        (ZI, "-2i"),
        (ZI, "1+2i"),
        (ZI, "i"),
        (ZI, "-1-i"),
        (GF3, "x^2+2x+1"),
        (GF2, "0"),
        (GF2, "x^3+x"),
    ],
)
def test_literais_ida_e_volta(ring, literal):
    assert format_element(parse_element(ring, literal)) == literal


def test_literal_invalido():
    with pytest.raises(ParseError):
        parse_element(Z, "abc")
    with pytest.raises(ParseError):
        parse_element(GF2, "")


def test_propriedades_de_anel(spec, rng):
    for _ in range(1000):
        a, b, c = (random_element(spec, rng, 4) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if not b.is_zero():
            assert exact_divide(a * b, b) == a


def test_forma_canonica_idempotente(spec, rng):
    for _ in range(200):
        e = random_element(spec, rng, 5)
        assert spec.normalize(spec.normalize(e.value)) == spec.normalize(e.value) == e.value


def test_potencia():
    x = GF2.gen()
    assert x ** 0 == GF2.one
    assert (x + GF2.one) ** 2 == x * x + GF2.one
    assert ZI.gen() ** 2 == ZI.element(-1)
    with pytest.raises(InvalidParams):
        x ** -1
