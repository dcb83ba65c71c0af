# -*- coding: utf-8 -*-
import pytest

from conftest import GF2, GF3, ZI, Z
from services.errors import InvalidParams, PoolExhausted
from services.ring_core import parse_element, random_element, window_enumerate
from services.ufp import (
    UfpSequence,
    block_products,
    exclusion_set,
    extend_ufp,
    grow_ufp,
    has_ufp,
)


def _zs(*ns):
    return [Z.element(n) for n in ns]


def test_ufp_vale():
    check = has_ufp(_zs(2, 3))
    assert check.holds
    assert check.avoids_zero_one
    assert check.as_dict() == {"holds": True, "fp_avoids_0_1": True}


def test_ufp_violada():
    check = has_ufp(_zs(2, 2))
    assert not check.holds
    assert (check.H, check.K) == ((1,), (2,))
    assert check.as_dict()["violation"] == {"H": [1], "K": [2], "product": "2"}


def test_ufp_violada_por_produto():
    check = has_ufp(_zs(2, 3, 6))
    assert not check.holds
    assert (check.H, check.K) == ((1, 2), (3,))


def test_produto_trivial_registrado():
    i = ZI.gen()
    check = has_ufp([i, -i])
    assert check.holds
    assert check.trivial_product == (1, 2)
    assert check.as_dict()["trivial_product_at"] == [1, 2]
    assert has_ufp(_zs(3, 0)).trivial_product == (2,)
    assert has_ufp(_zs(-1, 2)).trivial_product is None


def test_ufp_em_gf2():
    x = GF2.gen()
    assert has_ufp([x, x + GF2.one]).holds


def test_conjunto_de_exclusao():
    assert exclusion_set(_zs(2)) == set(_zs(2))
    assert exclusion_set(_zs(2, 3, 6)) == set(_zs(2, 3, 6))
    assert exclusion_set(_zs(4, 2)) == set(_zs(2, 4))
    assert exclusion_set([]) == set()


def test_exclusao_paralela_igual_serial():
    B = _zs(2, 3, 4, 6, 8, 12, 24, 5, 10)
    assert exclusion_set(B, jobs=3) == exclusion_set(B)


def test_limite_do_conjunto_de_exclusao(spec, rng):
    for _ in range(500):
        B = [random_element(spec, rng, 3) for _ in range(rng.between(1, 6))]
        assert len(exclusion_set(B)) <= (len(set(B)) + 1) ** 2


def test_exclusao_confere_por_multiplicacao(spec, rng):
    for _ in range(500):
        B = [random_element(spec, rng, 3) for _ in range(rng.between(1, 6))]
        base = set(B) | {spec.one}
        for x in exclusion_set(B):
            assert not x.is_zero() and not x.is_one()
            assert any(x * a == b for a in base for b in base)


_JANELAS_PEQUENAS = {Z: "N=30,signed", ZI: "B=3", GF2: "d=4", GF3: "d=3"}


def test_exclusao_completa_na_janela(spec, rng):
    window = window_enumerate(spec, _JANELAS_PEQUENAS[spec])
    for _ in range(100):
        B = [random_element(spec, rng, 2) for _ in range(rng.between(1, 4))]
        base = set(B) | {spec.one}
        C = exclusion_set(B)
        for x in window:
            if x.is_zero() or x.is_one():
                continue
            if any(x * a == b for a in base if not a.is_zero() for b in base):
                assert x in C


def test_extensao_em_gf2_sobre_grau_ate_3():
    x = GF2.gen()
    pool = window_enumerate(GF2, "d=4").elements
    seq = extend_ufp(UfpSequence((x,)), pool)
    assert seq.elements == (x, x + GF2.one)
    assert seq.verify().holds


_POOLS = {Z: "N=100", ZI: "B=4", GF2: "d=7", GF3: "d=4"}


def test_crescimento_aleatorio_preserva_ufp(spec, rng):
    window = window_enumerate(spec, _POOLS[spec])
    iniciais = [e for e in window if not e.is_zero() and not e.is_one()]
    for _ in range(500):
        seq = grow_ufp(rng.choice(iniciais), window, rng.between(2, 4))
        check = seq.verify()
        assert check.holds and check.avoids_zero_one


def test_extensao_escolhe_3():
    pool = window_enumerate(Z, "N=20").elements
    seq = extend_ufp(UfpSequence(tuple(_zs(2))), pool)
    assert seq.elements == tuple(_zs(2, 3))


def test_pool_esgotado():
    with pytest.raises(PoolExhausted):
        extend_ufp(UfpSequence(tuple(_zs(2))), _zs(1, 2, 0))


def test_extensao_exige_ufp():
    with pytest.raises(InvalidParams):
        extend_ufp(UfpSequence(tuple(_zs(2, 2))), _zs(3))


def test_cresce_ate_10_em_z():
    seq = grow_ufp(Z.element(2), window_enumerate(Z, "N=10000"), 10)
    assert len(seq) == 10
    check = seq.verify()
    assert check.holds and check.avoids_zero_one
    assert len(seq.fp) == 2 ** 10 - 1


def test_cresce_em_gf2():
    seq = grow_ufp(GF2.gen(), window_enumerate(GF2, "d=10"), 10)
    assert len(seq) == 10
    check = seq.verify()
    assert check.holds and check.avoids_zero_one
    assert len(seq.fp) == 2 ** 10 - 1


def test_cresce_em_gf3():
    seq = grow_ufp(parse_element(GF3, "2"), window_enumerate(GF3, "d=4"), 5)
    assert seq.verify().holds


def test_cresce_com_pool_pequeno():
    with pytest.raises(PoolExhausted) as exc:
        grow_ufp(Z.element(2), window_enumerate(Z, "N=4"), 5)
    assert exc.value.step is not None


def test_cresce_parametros_invalidos():
    window = window_enumerate(Z, "N=10")
    with pytest.raises(InvalidParams):
        grow_ufp(Z.one, window, 3)
    with pytest.raises(InvalidParams):
        grow_ufp(Z.element(2), window, 0)


def test_produtos_de_blocos():
    blocos = block_products(_zs(2, 3, 5, 7), [1, 3, 4])
    assert blocos.blocks == tuple(_zs(2, 15, 7))
    assert blocos.injective
    assert blocos.as_dict() == {"cuts": [1, 3, 4], "blocks": ["2", "15", "7"], "injective": True}


def test_blocos_sobre_sequencia_ufp_sao_distintos():
    seq = grow_ufp(Z.element(2), window_enumerate(Z, "N=1000"), 6)
    assert block_products(seq.elements, [2, 4, 6]).injective


def test_cortes_invalidos():
    with pytest.raises(InvalidParams):
        block_products(_zs(2, 3), [2, 1])
    with pytest.raises(InvalidParams):
        block_products(_zs(2, 3), [3])
    with pytest.raises(InvalidParams):
        block_products(_zs(2, 3), [])
