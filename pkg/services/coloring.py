# -*- coding: utf-8 -*-
"""
services/coloring.py
Colorações finitas de janelas: modelo de dados, sorteio determinístico
(SplitMix64, ver services/prng.py) e persistência em arquivo texto.

Formato do arquivo (UTF-8, LF):
    ring <anel>
    window <parâmetros>
    colors <r>
    <cores separadas por espaço, na ordem canônica da janela>
Sem espaço no fim das linhas e exatamente uma quebra de linha final.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Set, Union

import numpy as np

from services.errors import InvalidParams, ParseError
from services.prng import splitmix_block
from services.ring_core import (
    RingElement,
    RingKind,
    Window,
    parse_ring_spec,
    parse_window_params,
    window_enumerate,
)

logger = logging.getLogger(__name__)

COLORS_PER_LINE = 40


@dataclass(frozen=True)
class Coloring:
    window: Window
    r: int
    colors: np.ndarray = field(compare=False, repr=False)

    def __post_init__(self):
        if self.r < 1:
            raise InvalidParams("r deve ser >= 1")
        arr = np.asarray(self.colors, dtype=np.int64).copy()
        if arr.shape != (len(self.window),):
            raise InvalidParams(
                f"coloração com {arr.shape[0] if arr.ndim else 0} entradas para janela de {len(self.window)}"
            )
        if arr.size and (arr.min() < 1 or arr.max() > self.r):
            raise InvalidParams(f"cores fora de 1..{self.r}")
        arr.setflags(write=False)
        object.__setattr__(self, "colors", arr)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return (
            self.window == other.window
            and self.r == other.r
            and np.array_equal(self.colors, other.colors)
        )

    def __hash__(self) -> int:
        return hash((self.window, self.r, self.colors.tobytes()))

    def color_at(self, position: int) -> int:
        return int(self.colors[position])

    def color_of(self, e: RingElement) -> Optional[int]:
        """Cor de e, ou None se e está fora da janela."""
        k = self.window.position(e)
        return None if k is None else int(self.colors[k])

    def as_list(self) -> List[int]:
        return [int(c) for c in self.colors]


def random_coloring(window: Window, r: int, seed: int) -> Coloring:
    """Cor da posição k (0-based) = 1 + (out_{k+1} mod r), out = SplitMix64(seed)."""
    if r < 1:
        raise InvalidParams("r deve ser >= 1")
    raw = splitmix_block(seed, len(window))
    colors = (raw % np.uint64(r)).astype(np.int64) + 1
    return Coloring(window, r, colors)


def coloring_from_function(window: Window, r: int, fn: Callable[[RingElement], int]) -> Coloring:
    return Coloring(window, r, np.array([fn(e) for e in window], dtype=np.int64))


def constant_coloring(window: Window, r: int = 1) -> Coloring:
    return Coloring(window, r, np.ones(len(window), dtype=np.int64))


def parity_coloring(window: Window) -> Coloring:
    """Em Z: cor = 1 + (n mod 2). Nos outros anéis: 1 + (índice mod 2)."""
    if window.spec.kind is RingKind.INTEGERS:
        return coloring_from_function(window, 2, lambda e: 1 + e.value % 2)
    return Coloring(window, 2, 1 + np.arange(len(window)) % 2)


def color_class(c: Coloring, i: int) -> Set[RingElement]:
    if not 1 <= i <= c.r:
        raise InvalidParams(f"cor {i} fora de 1..{c.r}")
    positions = np.flatnonzero(c.colors == i)
    return {c.window.elements[k] for k in positions}


# ============================================================
# PERSISTÊNCIA
# ============================================================

def dumps_coloring(c: Coloring) -> str:
    lines = [
        f"ring {c.window.spec}",
        f"window {c.window.params}",
        f"colors {c.r}",
    ]
    values = c.as_list()
    for start in range(0, len(values), COLORS_PER_LINE):
        lines.append(" ".join(str(v) for v in values[start:start + COLORS_PER_LINE]))
    return "\n".join(lines) + "\n"


def loads_coloring(text: str) -> Coloring:
    lines = text.split("\n")
    if len(lines) < 4:
        raise ParseError("arquivo de coloração incompleto")
    header = {}
    for expected, line in zip(("ring", "window", "colors"), lines[:3]):
        key, _, value = line.partition(" ")
        if key != expected or not value:
            raise ParseError(f"cabeçalho inválido, esperado '{expected} ...'", line)
        header[key] = value

    spec = parse_ring_spec(header["ring"])
    window = window_enumerate(spec, parse_window_params(header["window"]))
    try:
        r = int(header["colors"])
    except ValueError:
        raise ParseError("número de cores inválido", header["colors"]) from None

    tokens = " ".join(lines[3:]).split()
    if len(tokens) != len(window):
        raise ParseError(f"esperadas {len(window)} cores, encontradas {len(tokens)}")
    colors = []
    for tok in tokens:
        try:
            value = int(tok)
        except ValueError:
            raise ParseError("cor não inteira", tok) from None
        if not 1 <= value <= r:
            raise ParseError(f"cor fora de 1..{r} (cores começam em 1)", tok)
        colors.append(value)
    return Coloring(window, r, np.array(colors, dtype=np.int64))


def store_coloring(path: Union[str, Path], c: Coloring) -> None:
    Path(path).write_text(dumps_coloring(c), encoding="utf-8", newline="\n")
    logger.info(f"[coloracao] {len(c.window)} cores gravadas em {path}")


def load_coloring(path: Union[str, Path]) -> Coloring:
    text = Path(path).read_text(encoding="utf-8")
    return loads_coloring(text)


def coloring_io(mode: str, path: Union[str, Path], c: Optional[Coloring] = None) -> Optional[Coloring]:
    """Fachada única load|store."""
    if mode == "store":
        if c is None:
            raise InvalidParams("store exige uma coloração")
        store_coloring(path, c)
        return c
    if mode == "load":
        return load_coloring(path)
    raise InvalidParams(f"modo desconhecido: {mode!r}")
