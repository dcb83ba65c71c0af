# -*- coding: utf-8 -*-
"""
services/workers.py
Execução em blocos com ThreadPoolExecutor. Resultados voltam na ordem dos
blocos (merge determinístico); um threading.Event opcional interrompe os
blocos restantes quando alguém já achou o que procurava.
"""
import logging
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

logger = logging.getLogger(__name__)

C = TypeVar("C")
R = TypeVar("R")


def default_jobs() -> int:
    try:
        return max(1, int(os.getenv("MONOCHROME_JOBS", "1")))
    except ValueError:
        logger.warning("[workers] MONOCHROME_JOBS inválido, usando 1")
        return 1


def split_range(n: int, parts: int) -> List[range]:
    """Divide range(n) em até `parts` faixas contíguas e não vazias."""
    parts = max(1, min(parts, n)) if n else 1
    size, extra = divmod(n, parts)
    out, start = [], 0
    for k in range(parts):
        stop = start + size + (1 if k < extra else 0)
        out.append(range(start, stop))
        start = stop
    return out


def run_chunks(
    fn: Callable[[C], R],
    chunks: Sequence[C],
    jobs: int = 1,
    stop: Optional[threading.Event] = None,
) -> List[Optional[R]]:
    """
    Aplica fn a cada bloco. Com jobs=1 roda em linha, na ordem.
    Blocos ainda não iniciados quando `stop` é sinalizado retornam None.
    """
    def guarded(chunk: C) -> Optional[R]:
        if stop is not None and stop.is_set():
            return None
        return fn(chunk)

    if jobs <= 1 or len(chunks) <= 1:
        return [guarded(ch) for ch in chunks]

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(guarded, ch) for ch in chunks]
        return [f.result() for f in futures]
