# -*- coding: utf-8 -*-
"""
services/search.py
Busca de colorações que evitam o padrão: existe uma r-coloração da janela
sem instância {xy} ∪ {x+f(y)} monocromática?

- build_instance: candidatos (conjuntos de elementos) em ordem canônica.
- avoidance_backtrack: backtracking com checagem adiante; Timeout é status.
- moreira_number: menor N com Forced em {1..N}, o análogo finito de janela.
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from services.coloring import Coloring
from services.errors import InvalidParams, SpecMismatch
from services.patterns import (
    DEFAULT_CONSTRAINTS,
    PolyFamily,
    ScanConstraints,
    eval_poly,
    format_poly,
    instance_from_values,
)
from services.ring_core import RingKind, Window, WindowParams, format_element, window_enumerate
from services.run_config import env_budget
from services.workers import run_chunks

logger = logging.getLogger(__name__)

FINITE_ANALOGUE_LABEL = "análogo finito: menor N com toda r-coloração de {1..N} forçando o padrão"


# ============================================================
# INSTÂNCIA
# ============================================================

@dataclass(frozen=True)
class AvoidanceInstance:
    window: Window
    r: int
    F: PolyFamily
    constraints: ScanConstraints
    candidates: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.window)

    def candidate_elements(self, k: int):
        return [self.window.elements[p] for p in self.candidates[k]]

    def monochromatic_candidate(self, coloring: Coloring) -> Optional[int]:
        """Índice do primeiro candidato monocromático, ou None."""
        if coloring.window != self.window:
            raise SpecMismatch("coloração de outra janela")
        for k, cand in enumerate(self.candidates):
            first = coloring.color_at(cand[0])
            if all(coloring.color_at(p) == first for p in cand[1:]):
                return k
        return None


def build_instance(
    window: Window,
    r: int,
    F: PolyFamily,
    constraints: ScanConstraints = DEFAULT_CONSTRAINTS,
) -> AvoidanceInstance:
    """Candidatos na ordem (índice de y, índice de x), sem repetir conjunto de elementos."""
    if r < 1:
        raise InvalidParams("r deve ser >= 1")
    if F.spec != window.spec:
        raise SpecMismatch(f"F sobre {F.spec}, janela sobre {window.spec}")
    bound = constraints.bind(window.spec)
    seen = set()
    candidates: List[Tuple[int, ...]] = []
    for y in window:
        if y in bound.exclude_y:
            continue
        f_values = [eval_poly(f, y) for f in F]
        for x in window:
            if x in bound.exclude_x:
                continue
            elements = instance_from_values(x, y, f_values).elements
            if constraints.require_in_window:
                if any(e not in window.index for e in elements):
                    continue
            else:
                elements = tuple(e for e in elements if e in window.index)
                if not elements:
                    continue
            if constraints.forbid_degenerate and len(elements) == 1:
                continue
            key = frozenset(elements)
            if key in seen:
                continue
            seen.add(key)
            candidates.append(tuple(window.index[e] for e in elements))
    logger.debug(f"[busca] {len(candidates)} candidatos em {window.describe()} (r={r}, F={F})")
    return AvoidanceInstance(window, r, F, constraints, tuple(candidates))


def validate_avoidance(inst: AvoidanceInstance, coloring: Coloring) -> bool:
    return inst.monochromatic_candidate(coloring) is None


# ============================================================
# RESULTADO
# ============================================================

class AvoidanceStatus(str, Enum):
    FOUND = "avoidance_found"
    FORCED = "forced"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    variables: int = 0
    candidates: int = 0
    branches: int = 1

    def as_dict(self) -> Dict[str, int]:
        return {
            "nodes": self.nodes,
            "variables": self.variables,
            "candidates": self.candidates,
            "branches": self.branches,
        }


@dataclass(frozen=True)
class AvoidanceResult:
    status: AvoidanceStatus
    stats: SearchStats
    coloring: Optional[Coloring] = None

    def as_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"status": self.status.value, "stats": self.stats.as_dict()}
        if self.coloring is not None:
            out["coloring"] = {
                format_element(e): color for e, color in zip(self.coloring.window, self.coloring.as_list())
            }
        return out


# ============================================================
# BACKTRACKING
# ============================================================

class _Backtracker:
    """
    Atribui cores na ordem dada. Por candidato guarda quantos elementos têm cada
    cor e quantos faltam; quando só falta um e todos os outros têm a cor c, c sai
    do domínio do que falta. Toda alteração vai para a trilha e é desfeita no
    retrocesso.
    """

    def __init__(self, inst: AvoidanceInstance, order: Sequence[int], budget: int):
        self.inst = inst
        self.r = inst.r
        self.order = list(order)
        self.budget = budget
        self.nodes = 0
        n = inst.size
        self.membership: List[List[int]] = [[] for _ in range(n)]
        for k, cand in enumerate(inst.candidates):
            for p in cand:
                self.membership[p].append(k)
        self.sizes = [len(c) for c in inst.candidates]
        self.count = [[0] * (self.r + 1) for _ in inst.candidates]
        self.uncolored = list(self.sizes)
        self.colors = [0] * n
        self.domain = [set(range(1, self.r + 1)) for _ in range(n)]
        self.trail: List[Tuple] = []
        self.dead = False
        for k, cand in enumerate(inst.candidates):
            if len(cand) == 1:
                self.domain[cand[0]].clear()
                self.dead = True

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            tag = entry[0]
            if tag == "color":
                self.colors[entry[1]] = 0
            elif tag == "count":
                _, k, c = entry
                self.count[k][c] -= 1
                self.uncolored[k] += 1
            else:
                _, p, c = entry
                self.domain[p].add(c)

    def _assign(self, p: int, c: int) -> bool:
        self.colors[p] = c
        self.trail.append(("color", p))
        for k in self.membership[p]:
            self.count[k][c] += 1
            self.uncolored[k] -= 1
            self.trail.append(("count", k, c))
            if self.count[k][c] == self.sizes[k]:
                return False
            if self.uncolored[k] == 1 and self.count[k][c] == self.sizes[k] - 1:
                last = next(q for q in self.inst.candidates[k] if self.colors[q] == 0)
                if c in self.domain[last]:
                    self.domain[last].discard(c)
                    self.trail.append(("domain", last, c))
                    if not self.domain[last]:
                        return False
        return True

    def preassign(self, p: int, c: int) -> bool:
        self.nodes += 1
        return c in self.domain[p] and self._assign(p, c)

    def run(self, start: int = 0) -> AvoidanceStatus:
        if self.dead:
            return AvoidanceStatus.FORCED
        depth = start
        if depth == len(self.order):
            return AvoidanceStatus.FOUND
        next_color = [1] * (len(self.order) + 1)
        marks = [0] * (len(self.order) + 1)
        while True:
            p = self.order[depth]
            if self.colors[p]:
                self._undo(marks[depth])
            c = next_color[depth]
            while c <= self.r and c not in self.domain[p]:
                c += 1
            if c > self.r:
                next_color[depth] = 1
                depth -= 1
                if depth < start:
                    return AvoidanceStatus.FORCED
                continue
            next_color[depth] = c + 1
            if self.nodes >= self.budget:
                return AvoidanceStatus.TIMEOUT
            self.nodes += 1
            marks[depth] = len(self.trail)
            if self._assign(p, c):
                depth += 1
                if depth == len(self.order):
                    return AvoidanceStatus.FOUND
                next_color[depth] = 1
            else:
                self._undo(marks[depth])

    def coloring(self) -> Coloring:
        return Coloring(self.inst.window, self.r, [c or 1 for c in self.colors])


def variable_order(inst: AvoidanceInstance) -> List[int]:
    """Elementos presentes em algum candidato, por pertinência decrescente e depois índice."""
    counts = [0] * inst.size
    for cand in inst.candidates:
        for p in cand:
            counts[p] += 1
    return sorted((p for p in range(inst.size) if counts[p]), key=lambda p: (-counts[p], p))


def avoidance_backtrack(inst: AvoidanceInstance, budget: Optional[int] = None, jobs: int = 1) -> AvoidanceResult:
    """
    Forced só quando o espaço inteiro foi coberto; AvoidanceFound traz uma
    coloração validada; estourar `budget` (tentativas de atribuição) dá Timeout.
    """
    budget = env_budget() if budget is None else budget
    order = variable_order(inst)
    base = dict(variables=len(order), candidates=len(inst.candidates))

    if not inst.candidates:
        coloring = Coloring(inst.window, inst.r, [1] * inst.size)
        return AvoidanceResult(AvoidanceStatus.FOUND, SearchStats(0, **base), coloring)
    if budget <= 0:
        return AvoidanceResult(AvoidanceStatus.TIMEOUT, SearchStats(0, **base))

    if jobs <= 1 or inst.r == 1:
        bt = _Backtracker(inst, order, budget)
        status = bt.run()
        result = AvoidanceResult(
            status,
            SearchStats(bt.nodes, **base),
            bt.coloring() if status is AvoidanceStatus.FOUND else None,
        )
    else:
        result = _split_first_variable(inst, order, budget, jobs, base)

    if result.coloring is not None and not validate_avoidance(inst, result.coloring):
        raise InvalidParams("coloração encontrada não valida (erro interno da busca)")
    logger.debug(f"[busca] {inst.window.describe()}: {result.status.value} ({result.stats.nodes} nós)")
    return result


def _split_first_variable(inst, order, budget, jobs, base) -> AvoidanceResult:
    """Um ramo por cor do primeiro elemento; Forced exige todos refutados."""
    first = order[0]
    best = [inst.r + 1]
    lock = threading.Lock()

    def branch(c: int):
        if best[0] < c:
            return None
        bt = _Backtracker(inst, order, budget)
        if not bt.preassign(first, c):
            return AvoidanceStatus.FORCED, bt.nodes, None
        status = bt.run(start=1)
        if status is AvoidanceStatus.FOUND:
            with lock:
                best[0] = min(best[0], c)
            return status, bt.nodes, bt.coloring()
        return status, bt.nodes, None

    outcomes = run_chunks(branch, list(range(1, inst.r + 1)), jobs=jobs)
    nodes = sum(o[1] for o in outcomes if o is not None)
    stats = SearchStats(nodes, branches=inst.r, **base)
    for o in outcomes:
        if o is not None and o[0] is AvoidanceStatus.FOUND:
            return AvoidanceResult(AvoidanceStatus.FOUND, stats, o[2])
    if any(o is not None and o[0] is AvoidanceStatus.TIMEOUT for o in outcomes):
        return AvoidanceResult(AvoidanceStatus.TIMEOUT, stats)
    return AvoidanceResult(AvoidanceStatus.FORCED, stats)


# ============================================================
# NÚMERO DE MOREIRA (análogo finito)
# ============================================================

@dataclass(frozen=True)
class ProbeRecord:
    N: int
    status: AvoidanceStatus
    nodes: int
    candidates: int
    sat: Optional[bool] = None
    engine: Optional[str] = None

    @property
    def agrees(self) -> Optional[bool]:
        if self.sat is None or self.status is AvoidanceStatus.TIMEOUT:
            return None
        return self.sat == (self.status is AvoidanceStatus.FOUND)

    def as_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "N": self.N,
            "status": self.status.value,
            "nodes": self.nodes,
            "candidates": self.candidates,
        }
        if self.sat is not None:
            out.update(sat=self.sat, engine=self.engine, agrees=self.agrees)
        return out


@dataclass(frozen=True)
class MoreiraResult:
    r: int
    F: str
    maxN: int
    status: str  # found | not_found | inconclusive
    N: Optional[int]
    probes: Tuple[ProbeRecord, ...] = field(default_factory=tuple)

    @property
    def engines_agree(self) -> Optional[bool]:
        checks = [p.agrees for p in self.probes if p.agrees is not None]
        return all(checks) if checks else None

    def as_dict(self) -> Dict[str, object]:
        return {
            "notion": FINITE_ANALOGUE_LABEL,
            "r": self.r,
            "F": self.F,
            "maxN": self.maxN,
            "status": self.status,
            "N": self.N,
            "engines_agree": self.engines_agree,
            "probes": [p.as_dict() for p in self.probes],
        }


def moreira_number(
    r: int,
    F: PolyFamily,
    maxN: int,
    budget: Optional[int] = None,
    constraints: ScanConstraints = DEFAULT_CONSTRAINTS,
    cross_check: bool = False,
    jobs: int = 1,
) -> MoreiraResult:
    """
    Sonda N = 1, 2, 4, ... até o primeiro Forced (limitado a maxN) e depois faz
    busca binária, usando que Forced em N implica Forced em N+1. Timeout em
    qualquer sonda encerra com status inconclusive e N = a sonda.
    """
    if F.spec.kind is not RingKind.INTEGERS:
        raise InvalidParams("número de Moreira só é definido sobre Z")
    if maxN < 1:
        raise InvalidParams("maxN deve ser >= 1")
    budget = env_budget() if budget is None else budget
    probes: List[ProbeRecord] = []
    label = ", ".join(format_poly(f) for f in F)

    def probe(N: int) -> AvoidanceStatus:
        window = window_enumerate(F.spec, WindowParams("N", N))
        inst = build_instance(window, r, F, constraints)
        result = avoidance_backtrack(inst, budget, jobs)
        sat = engine = None
        if cross_check:
            from services.cnf import cnf_export, external_satisfiable

            sat, _, engine = external_satisfiable(cnf_export(inst))
        record = ProbeRecord(N, result.status, result.stats.nodes, len(inst.candidates), sat, engine)
        if record.agrees is False:
            logger.error(f"[busca] motores discordam em N={N}: backtracking={result.status.value}, sat={sat}")
        probes.append(record)
        return result.status

    def done(status: str, N: Optional[int]) -> MoreiraResult:
        logger.info(f"[busca] moreira r={r} F={{{label}}}: {status} N={N}")
        return MoreiraResult(r, label, maxN, status, N, tuple(probes))

    lo, hi, N = 0, None, 1
    while True:
        N = min(N, maxN)
        status = probe(N)
        if status is AvoidanceStatus.TIMEOUT:
            return done("inconclusive", N)
        if status is AvoidanceStatus.FORCED:
            hi = N
            break
        lo = N
        if N == maxN:
            return done("not_found", None)
        N *= 2

    while hi - lo > 1:
        mid = (lo + hi) // 2
        status = probe(mid)
        if status is AvoidanceStatus.TIMEOUT:
            return done("inconclusive", mid)
        if status is AvoidanceStatus.FORCED:
            hi = mid
        else:
            lo = mid
    return done("found", hi)
