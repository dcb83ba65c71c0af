# -*- coding: utf-8 -*-
"""
services/ufp.py
Unicidade de produtos finitos (UFP): verificação, conjunto de exclusão por
divisão exata e extensão determinística de sequências (primeiro candidato
admissível na ordem do pool), com re-verificação após cada passo.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from services.errors import InvalidParams, PoolExhausted, WitnessError
from services.largeness import MAX_SEQUENCE_LENGTH, subset_table
from services.ring_core import RingElement, Window, format_element, try_divide
from services.workers import run_chunks, split_range

logger = logging.getLogger(__name__)

MAX_GROW_LENGTH = 20


def _mask_indices(mask: int) -> Tuple[int, ...]:
    """Índices 1-based dos bits ligados."""
    return tuple(k + 1 for k in range(mask.bit_length()) if mask >> k & 1)


def finite_product_table(seq: Sequence[RingElement]) -> List[Optional[RingElement]]:
    """table[mask] = Π_{t ∈ mask} y_t; table[0] = None."""
    return subset_table(seq, lambda a, b: a * b)


@dataclass(frozen=True)
class UfpCheck:
    holds: bool
    H: Optional[Tuple[int, ...]] = None
    K: Optional[Tuple[int, ...]] = None
    product: Optional[RingElement] = None
    trivial_product: Optional[Tuple[int, ...]] = None

    @property
    def avoids_zero_one(self) -> bool:
        return self.trivial_product is None

    def as_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"holds": self.holds, "fp_avoids_0_1": self.avoids_zero_one}
        if not self.holds:
            out["violation"] = {"H": list(self.H), "K": list(self.K), "product": format_element(self.product)}
        if self.trivial_product is not None:
            out["trivial_product_at"] = list(self.trivial_product)
        return out


def has_ufp(seq: Sequence[RingElement]) -> UfpCheck:
    """
    Produtos sobre conjuntos de índices distintos e não vazios são distintos?
    Máscaras em ordem crescente: a primeira repetição dá (H, K) com H a
    máscara anterior. À parte, registra o primeiro produto igual a 0 ou 1.
    """
    if len(seq) > MAX_SEQUENCE_LENGTH:
        raise InvalidParams(f"sequência com {len(seq)} termos; o limite é {MAX_SEQUENCE_LENGTH}")
    table = finite_product_table(seq)
    first_mask: Dict[RingElement, int] = {}
    trivial = None
    for mask in range(1, len(table)):
        p = table[mask]
        if trivial is None and (p.is_zero() or p.is_one()):
            trivial = _mask_indices(mask)
        if p in first_mask:
            return UfpCheck(False, _mask_indices(first_mask[p]), _mask_indices(mask), p, trivial)
        first_mask[p] = mask
    return UfpCheck(True, trivial_product=trivial)


def exclusion_set(B: Iterable[RingElement], jobs: int = 1) -> Set[RingElement]:
    """C = {β/α : α, β ∈ B ∪ {1}, divisão exata} ∖ {0, 1}."""
    B = list(B)
    if not B:
        return set()
    one = B[0].spec.one
    base = sorted(set(B) | {one})

    def quotients(alphas: range) -> Set[RingElement]:
        out = set()
        for ia in alphas:
            alpha = base[ia]
            if alpha.is_zero():
                continue
            for beta in base:
                x = try_divide(beta, alpha)
                if x is not None and not x.is_zero() and not x.is_one():
                    out.add(x)
        return out

    C: Set[RingElement] = set()
    for part in run_chunks(quotients, split_range(len(base), max(1, jobs)), jobs=jobs):
        C |= part or set()
    return C


@dataclass(frozen=True)
class UfpSequence:
    elements: Tuple[RingElement, ...]

    def __post_init__(self):
        if not self.elements:
            raise InvalidParams("sequência UFP vazia")
        if len(self.elements) > MAX_SEQUENCE_LENGTH:
            raise InvalidParams(f"sequência com {len(self.elements)} termos; o limite é {MAX_SEQUENCE_LENGTH}")

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def fp_cache(self) -> List[Optional[RingElement]]:
        return finite_product_table(self.elements)

    @property
    def fp(self) -> FrozenSet[RingElement]:
        return frozenset(self.fp_cache[1:])

    def verify(self) -> UfpCheck:
        return has_ufp(self.elements)

    def appended(self, y: RingElement) -> "UfpSequence":
        return UfpSequence(self.elements + (y,))

    def as_list(self) -> List[str]:
        return [format_element(e) for e in self.elements]


def extend_ufp(seq: UfpSequence, pool: Iterable[RingElement]) -> UfpSequence:
    """Primeiro elemento do pool fora de C ∪ {0, 1}, com C = exclusion_set(FP(seq))."""
    check = seq.verify()
    if not check.holds or not check.avoids_zero_one:
        raise InvalidParams("a sequência de entrada precisa ter UFP e FP ⊆ R∖{0,1}")
    C = exclusion_set(seq.fp)
    for y in pool:
        if y.is_zero() or y.is_one() or y in C:
            continue
        extended = seq.appended(y)
        guard = extended.verify()
        if not guard.holds or not guard.avoids_zero_one:
            raise WitnessError(f"guarda UFP falhou ao acrescentar {format_element(y)}: {guard.as_dict()}")
        logger.debug(f"[ufp] |C| = {len(C)}, acrescentado {format_element(y)}")
        return extended
    raise PoolExhausted(f"pool contido em C ∪ {{0,1}} (|C| = {len(C)})")


def grow_ufp(start: RingElement, pool_window: Window, m: int) -> UfpSequence:
    """m−1 extensões sobre a ordem canônica da janela, a partir de ⟨start⟩."""
    if start.is_zero() or start.is_one():
        raise InvalidParams("start deve estar fora de {0, 1}")
    if not 1 <= m <= MAX_GROW_LENGTH:
        raise InvalidParams(f"m deve estar em 1..{MAX_GROW_LENGTH}")
    seq = UfpSequence((start,))
    for step in range(1, m):
        try:
            seq = extend_ufp(seq, pool_window.elements)
        except PoolExhausted as exc:
            raise PoolExhausted(str(exc), step=step) from None
    logger.info(f"[ufp] sequência de comprimento {m}: {seq.as_list()}")
    return seq


@dataclass(frozen=True)
class BlockProducts:
    cuts: Tuple[int, ...]
    blocks: Tuple[RingElement, ...]
    injective: bool

    def as_dict(self) -> Dict[str, object]:
        return {
            "cuts": list(self.cuts),
            "blocks": [format_element(z) for z in self.blocks],
            "injective": self.injective,
        }


def block_products(seq: Sequence[RingElement], cuts: Sequence[int]) -> BlockProducts:
    """
    z_n = y_{k(n−1)+1} ⋯ y_{k(n)} para cortes 0 = k(0) < k(1) < ... <= len(seq).
    Sobre sequência com UFP os blocos são distintos.
    """
    cuts = tuple(cuts)
    if not cuts:
        raise InvalidParams("informe ao menos um corte")
    previous = 0
    for k in cuts:
        if not previous < k <= len(seq):
            raise InvalidParams(f"cortes precisam ser crescentes em 1..{len(seq)} (recebido {k})")
        previous = k
    blocks = []
    previous = 0
    for k in cuts:
        z = seq[previous]
        for y in seq[previous + 1:k]:
            z = z * y
        blocks.append(z)
        previous = k
    injective = len(set(blocks)) == len(blocks)
    if not injective:
        logger.warning("[ufp] produtos de blocos repetidos (a sequência não tem UFP?)")
    return BlockProducts(cuts, tuple(blocks), injective)
