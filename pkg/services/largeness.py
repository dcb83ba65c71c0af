# -*- coding: utf-8 -*-
"""
services/largeness.py
Versões finitas, baseadas em testemunhas, de sindético, sindético por partes,
IP e refutação de IP*, mais o transporte exato das testemunhas por dilatação
(rA) e por divisão (A/y).

Numa janela finita nada é "sindético por partes" de verdade: o que se afirma é
"A admite uma testemunha (G, B, x) nesta janela", ou seja
    ∀ b ∈ B ∃ t ∈ G : t + b + x ∈ A.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set

from services.errors import InvalidParams, NotDivisible, ParseError
from services.prng import SplitMix64
from services.ring_core import (
    RingElement,
    RingKind,
    Window,
    exact_divide,
    format_element,
    parse_element,
    try_divide,
)
from services.workers import run_chunks, split_range

logger = logging.getLogger(__name__)

MAX_SEQUENCE_LENGTH = 24


@dataclass(frozen=True)
class PSWitness:
    gaps: FrozenSet[RingElement]
    block: FrozenSet[RingElement]
    anchor: RingElement

    def as_dict(self) -> Dict[str, object]:
        return {
            "gaps": sorted(format_element(t) for t in self.gaps),
            "block": sorted(format_element(b) for b in self.block),
            "anchor": format_element(self.anchor),
        }


def make_witness(gaps: Iterable[RingElement], block: Iterable[RingElement], anchor: RingElement) -> PSWitness:
    return PSWitness(frozenset(gaps), frozenset(block), anchor)


def ps_witness_violation(A: Set[RingElement], w: PSWitness) -> Optional[RingElement]:
    """Primeiro b ∈ B sem t ∈ G com t + b + x ∈ A, ou None se a testemunha vale."""
    for b in sorted(w.block):
        base = b + w.anchor
        if not any(t + base in A for t in w.gaps):
            return b
    return None


def validate_ps_witness(A: Set[RingElement], w: PSWitness) -> bool:
    return ps_witness_violation(A, w) is None


def _require_subset(A: Set[RingElement], window: Window) -> None:
    outside = [e for e in A if e not in window.index]
    if outside:
        raise InvalidParams(f"A não está contido na janela (ex.: {format_element(outside[0])})")


# ============================================================
# SINDÉTICO E SINDÉTICO POR PARTES
# ============================================================

@dataclass(frozen=True)
class SyndeticResult:
    holds: bool
    counterexample: Optional[RingElement] = None


def syndetic_check(A: Set[RingElement], G: Iterable[RingElement], window: Window) -> SyndeticResult:
    """Vale sse ∀ w na janela ∃ t ∈ G com t + w ∈ A; senão devolve o primeiro w violador."""
    _require_subset(A, window)
    gaps = list(G)
    for w in window:
        if not any(t + w in A for t in gaps):
            return SyndeticResult(False, w)
    return SyndeticResult(True)


@dataclass(frozen=True)
class PSSearchResult:
    found: bool
    witness: Optional[PSWitness] = None


def ps_witness_search(
    A: Set[RingElement],
    G: Iterable[RingElement],
    B: Iterable[RingElement],
    window: Window,
    jobs: int = 1,
) -> PSSearchResult:
    """Menor âncora x (ordem canônica da janela) com B + x ⊆ ⋃_{t∈G} (−t + A)."""
    _require_subset(A, window)
    gaps = frozenset(G)
    block = frozenset(B)
    ordered_block = sorted(block)

    def covers(x: RingElement) -> bool:
        return all(any(t + b + x in A for t in gaps) for b in ordered_block)

    def first_in(chunk: range) -> Optional[int]:
        for k in chunk:
            if covers(window.elements[k]):
                return k
        return None

    hits = run_chunks(first_in, split_range(len(window), max(1, jobs)), jobs=jobs)
    for k in hits:
        if k is not None:
            witness = PSWitness(gaps, block, window.elements[k])
            logger.debug(f"[grandeza] âncora encontrada: {format_element(witness.anchor)}")
            return PSSearchResult(True, witness)
    return PSSearchResult(False)


# ============================================================
# SOMAS E PRODUTOS FINITOS
# ============================================================

def _check_length(seq: Sequence[RingElement]) -> None:
    if not seq:
        raise InvalidParams("sequência vazia")
    if len(seq) > MAX_SEQUENCE_LENGTH:
        raise InvalidParams(f"sequência com {len(seq)} termos; o limite é {MAX_SEQUENCE_LENGTH} (2^24 subconjuntos)")


def subset_table(
    seq: Sequence[RingElement], op: Callable[[RingElement, RingElement], RingElement]
) -> List[Optional[RingElement]]:
    """table[mask] = op sobre os termos de mask (mask >= 1); table[0] = None."""
    _check_length(seq)
    table: List[Optional[RingElement]] = [None] * (1 << len(seq))
    for mask in range(1, len(table)):
        low = mask & -mask
        bit = low.bit_length() - 1
        rest = mask ^ low
        table[mask] = seq[bit] if rest == 0 else op(table[rest], seq[bit])
    return table


@dataclass(frozen=True)
class FSSet:
    generators: tuple
    sums: FrozenSet[RingElement]

    def __contains__(self, e: RingElement) -> bool:
        return e in self.sums

    def __len__(self) -> int:
        return len(self.sums)


def finite_sums(seq: Sequence[RingElement]) -> FSSet:
    table = subset_table(seq, lambda a, b: a + b)
    return FSSet(tuple(seq), frozenset(table[1:]))


def finite_products(seq: Sequence[RingElement]) -> FrozenSet[RingElement]:
    table = subset_table(seq, lambda a, b: a * b)
    return frozenset(table[1:])


# ============================================================
# REFUTAÇÃO DE IP*
# ============================================================

@dataclass(frozen=True)
class IpStarResult:
    found: bool
    sequence: Optional[tuple] = None
    samples_tried: int = 0


def ipstar_refute(
    A: Set[RingElement],
    window: Window,
    seq_len: int,
    samples: int,
    seed: int,
    entries: Optional[Sequence[RingElement]] = None,
) -> IpStarResult:
    """
    Sorteia `samples` sequências de comprimento seq_len (termos da janela, ou de
    `entries` se dado) e devolve a primeira cujo FS não encontra A. As somas são
    feitas no anel; soma fora de A (inclusive fora da janela) conta como "não
    está em A". NoneFound é evidência, não prova.
    """
    if seq_len < 1:
        raise InvalidParams("seq_len deve ser >= 1")
    pool = list(entries) if entries is not None else list(window.elements)
    if not pool:
        raise InvalidParams("nenhum termo disponível para sortear")
    rng = SplitMix64(seed)
    for k in range(samples):
        seq = [rng.choice(pool) for _ in range(seq_len)]
        if not any(s in A for s in finite_sums(seq).sums):
            logger.info(f"[grandeza] contraexemplo IP* na amostra {k + 1}")
            return IpStarResult(True, tuple(seq), k + 1)
    return IpStarResult(False, None, samples)


# ============================================================
# TRANSPORTE (DILATAÇÃO E DIVISÃO)
# ============================================================

def dilation_transport(w: PSWitness, r: RingElement) -> PSWitness:
    """(G, B, x) ↦ (rG, rB, rx). Certifica rA porque r(t + b + x) = rt + rb + rx."""
    if r.is_zero():
        raise InvalidParams("r deve ser não nulo")
    return PSWitness(
        frozenset(r * t for t in w.gaps),
        frozenset(r * b for b in w.block),
        r * w.anchor,
    )


def division_transport(w: PSWitness, y: RingElement, A: Optional[Set[RingElement]] = None) -> PSWitness:
    """
    (G, B, x) ↦ (G/y, B/y, x/y), inversa exata de dilation_transport por y.
    NotDivisible sinaliza que a hipótese A ⊆ yR (ou a compatibilidade da
    testemunha) foi violada.
    """
    if y.is_zero():
        raise InvalidParams("y deve ser não nulo")
    if A is not None:
        for a in A:
            if try_divide(a, y) is None:
                raise NotDivisible(f"A ⊄ yR: {format_element(a)} não é múltiplo de {format_element(y)}")
    return PSWitness(
        frozenset(exact_divide(t, y) for t in w.gaps),
        frozenset(exact_divide(b, y) for b in w.block),
        exact_divide(w.anchor, y),
    )


def dilate_set(A: Iterable[RingElement], r: RingElement) -> Set[RingElement]:
    return {r * a for a in A}


def divide_set(A: Iterable[RingElement], y: RingElement) -> Set[RingElement]:
    return {exact_divide(a, y) for a in A}


# ============================================================
# CONJUNTOS DE TRANSLAÇÕES
# ============================================================

def shift_set(A: Set[RingElement], P: Iterable[RingElement], window: Window) -> List[RingElement]:
    """{s ∈ janela : s + P ⊆ A}, na ordem canônica."""
    shifts = list(P)
    return [s for s in window if all(s + p in A for p in shifts)]


# ============================================================
# LITERAIS DE CONJUNTOS
# ============================================================

_IDEAL_RE = re.compile(r"^ideal\((.+)\)$")


def parse_element_set(window: Window, literal: str) -> Set[RingElement]:
    """`{e1,e2,...}`, ou predefinidos `evens`, `odds`, `ideal(m)` (= mR ∩ janela), `window`."""
    spec = window.spec
    text = (literal or "").strip()
    if text == "window":
        return set(window.elements)
    if text in ("evens", "odds"):
        two = spec.element(2) if spec.kind is not RingKind.POLY else None
        if two is None or two.is_zero():
            raise ParseError("'evens'/'odds' exigem 2 ≠ 0 no anel", text)
        evens = {e for e in window if try_divide(e, two) is not None}
        return evens if text == "evens" else set(window.elements) - evens
    m = _IDEAL_RE.match(text)
    if m:
        gen = parse_element(spec, m.group(1))
        if gen.is_zero():
            return {e for e in window if e.is_zero()}
        return {e for e in window if try_divide(e, gen) is not None}
    if text.startswith("{") and text.endswith("}"):
        body = text[1:-1].strip()
        if not body:
            return set()
        return {parse_element(spec, tok) for tok in split_top_level(body)}
    raise ParseError("conjunto inválido (use {..}, evens, odds, ideal(m) ou window)", literal)


def split_top_level(body: str) -> List[str]:
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:k])
            start = k + 1
    parts.append(body[start:])
    return [p.strip() for p in parts if p.strip()]
