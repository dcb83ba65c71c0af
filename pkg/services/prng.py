# -*- coding: utf-8 -*-
"""
services/prng.py
Gerador SplitMix64, escrito por extenso para que a mesma semente produza a
mesma sequência em qualquer plataforma ou linguagem.

    state_k = seed + k * 0x9E3779B97F4A7C15            (mod 2^64), k = 1, 2, ...
    z = (state_k ^ (state_k >> 30)) * 0xBF58476D1CE4E5B9 (mod 2^64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB             (mod 2^64)
    out_k = z ^ (z >> 31)

Sorteio em {0..n-1}: out_k mod n (o viés de módulo é aceito e documentado).
"""
from typing import Sequence, TypeVar

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB

T = TypeVar("T")


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * MIX_1) & MASK64
    z = ((z ^ (z >> 27)) * MIX_2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Gerador sequencial. `SplitMix64(seed).next_u64()` é out_1."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("n deve ser positivo")
        return self.next_u64() % n

    def between(self, lo: int, hi: int) -> int:
        """Inteiro uniforme em [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]


def splitmix_block(seed: int, count: int) -> np.ndarray:
    """out_1..out_count de uma vez, vetorizado em uint64 (aritmética mod 2^64)."""
    ks = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + ks * np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX_1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX_2)
        z = z ^ (z >> np.uint64(31))
    return z
