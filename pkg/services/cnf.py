# -*- coding: utf-8 -*-
"""
services/cnf.py
Codificação DIMACS de "nenhum candidato monocromático", decodificação de
modelos, um DPLL de referência (só para escala de teste) e o solver externo
CaDiCaL via python-sat, carregado sob demanda.

Variável var(e, c) = índice(e)·r + c + 1, com índice 0-based e c ∈ 0..r−1.
Ordem das cláusulas: ao-menos-uma cor por elemento, no-máximo-uma (pares),
depois uma cláusula por (candidato, cor).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Sequence, Tuple

from services.coloring import Coloring
from services.errors import CnfModelError, ParseError
from services.ring_core import format_element

if TYPE_CHECKING:
    from services.search import AvoidanceInstance

logger = logging.getLogger(__name__)

Clause = Tuple[int, ...]


def var_of(index: int, color: int, r: int) -> int:
    """color em 1..r (1-based, como na coloração)."""
    return index * r + (color - 1) + 1


@dataclass
class CnfDocument:
    num_vars: int
    clauses: List[Clause] = field(default_factory=list)
    comments: List[str] = field(default_factory=list)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"c {text}" for text in self.comments]
        lines.append(f"p cnf {self.num_vars} {self.num_clauses}")
        lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"

    def with_units(self, units: Iterable[int]) -> "CnfDocument":
        return CnfDocument(self.num_vars, self.clauses + [(u,) for u in units], list(self.comments))


def cnf_export(inst: "AvoidanceInstance") -> CnfDocument:
    r = inst.r
    n = inst.size
    doc = CnfDocument(n * r)
    for idx, e in enumerate(inst.window):
        doc.comments.append(f"map {format_element(e)} {idx}")
    for idx in range(n):
        doc.clauses.append(tuple(var_of(idx, c, r) for c in range(1, r + 1)))
    for idx in range(n):
        for c1 in range(1, r + 1):
            for c2 in range(c1 + 1, r + 1):
                doc.clauses.append((-var_of(idx, c1, r), -var_of(idx, c2, r)))
    for cand in inst.candidates:
        for c in range(1, r + 1):
            doc.clauses.append(tuple(-var_of(p, c, r) for p in cand))
    logger.debug(f"[cnf] {doc.num_vars} variáveis, {doc.num_clauses} cláusulas")
    return doc


def parse_dimacs(text: str) -> CnfDocument:
    header: Optional[Tuple[int, int]] = None
    comments: List[str] = []
    clauses: List[Clause] = []
    pending: List[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            comments.append(line[1:].strip())
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf" or header is not None:
                raise ParseError("cabeçalho DIMACS inválido", line)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("cabeçalho DIMACS inválido", line) from None
            continue
        if header is None:
            raise ParseError("cláusula antes do cabeçalho 'p cnf'", line)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError("literal inválido", tok) from None
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            elif abs(lit) > header[0]:
                raise ParseError(f"literal fora de 1..{header[0]}", tok)
            else:
                pending.append(lit)
    if header is None:
        raise ParseError("arquivo sem cabeçalho 'p cnf'")
    if pending:
        raise ParseError("última cláusula sem terminador 0", " ".join(map(str, pending)))
    if len(clauses) != header[1]:
        raise ParseError(f"cabeçalho anuncia {header[1]} cláusulas, arquivo tem {len(clauses)}")
    return CnfDocument(header[0], clauses, comments)


# ============================================================
# MODELOS
# ============================================================

def parse_model(text: str) -> List[int]:
    """Aceita linhas `v ...` (saída de solver) ou um literal por linha; 0 final é ignorado."""
    literals: List[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("s"):
            if "UNSAT" in line.upper():
                raise CnfModelError("o solver declarou a fórmula insatisfatível")
            continue
        if line.startswith("v"):
            line = line[1:]
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError("literal de modelo inválido", tok) from None
            if lit != 0:
                literals.append(lit)
    return literals


def cnf_model_decode(model: Sequence[int], inst: "AvoidanceInstance") -> Coloring:
    r = inst.r
    true_vars = {lit for lit in model if lit > 0}
    colors: List[int] = []
    for idx, e in enumerate(inst.window):
        chosen = [c for c in range(1, r + 1) if var_of(idx, c, r) in true_vars]
        if not chosen:
            raise CnfModelError(f"modelo sem cor para {format_element(e)} (viola ao-menos-uma)")
        if len(chosen) > 1:
            raise CnfModelError(f"modelo com cores {chosen} em {format_element(e)} (viola no-máximo-uma)")
        colors.append(chosen[0])
    coloring = Coloring(inst.window, r, colors)
    bad = inst.monochromatic_candidate(coloring)
    if bad is not None:
        elements = ", ".join(format_element(e) for e in inst.candidate_elements(bad))
        raise CnfModelError(f"coloração decodificada tem candidato monocromático {{{elements}}}")
    return coloring


def coloring_units(c: Coloring) -> List[int]:
    """Literais unitários que fixam a coloração (positivo na cor, negativo nas demais)."""
    units = []
    for idx, color in enumerate(c.as_list()):
        for k in range(1, c.r + 1):
            lit = var_of(idx, k, c.r)
            units.append(lit if k == color else -lit)
    return units


# ============================================================
# SOLVERS
# ============================================================

def dpll_satisfiable(doc: CnfDocument) -> Optional[List[int]]:
    """DPLL com propagação unitária. Devolve modelo total ou None. Só para instâncias pequenas."""
    clauses = [list(c) for c in doc.clauses]
    if any(not c for c in clauses):
        return None

    def propagate(assign: Dict[int, bool]) -> Optional[Dict[int, bool]]:
        changed = True
        while changed:
            changed = False
            for clause in clauses:
                free = []
                satisfied = False
                for lit in clause:
                    val = assign.get(abs(lit))
                    if val is None:
                        free.append(lit)
                    elif val == (lit > 0):
                        satisfied = True
                        break
                if satisfied:
                    continue
                if not free:
                    return None
                if len(free) == 1:
                    assign[abs(free[0])] = free[0] > 0
                    changed = True
        return assign

    def pick(assign: Dict[int, bool]) -> Optional[int]:
        for clause in clauses:
            if any(assign.get(abs(lit)) == (lit > 0) for lit in clause):
                continue
            for lit in clause:
                if abs(lit) not in assign:
                    return lit
        return None

    stack = [dict()]
    while stack:
        assign = propagate(stack.pop())
        if assign is None:
            continue
        lit = pick(assign)
        if lit is None:
            return [v if assign.get(v, False) else -v for v in range(1, doc.num_vars + 1)]
        negative = dict(assign)
        negative[abs(lit)] = lit < 0
        positive = dict(assign)
        positive[abs(lit)] = lit > 0
        stack.append(negative)
        stack.append(positive)
    return None


def external_satisfiable(doc: CnfDocument) -> Tuple[bool, Optional[List[int]], str]:
    """(satisfatível, modelo, motor). CaDiCaL via python-sat; sem o pacote, cai no DPLL."""
    try:
        from pysat.solvers import Cadical195
    except ImportError:
        logger.warning("[cnf] python-sat indisponível, usando o DPLL de referência")
        model = dpll_satisfiable(doc)
        return model is not None, model, "dpll"
    with Cadical195(bootstrap_with=[list(c) for c in doc.clauses]) as solver:
        sat = solver.solve()
        model = solver.get_model() if sat else None
    if model is not None:
        present = {abs(lit) for lit in model}
        model = list(model) + [-v for v in range(1, doc.num_vars + 1) if v not in present]
    return bool(sat), model, "cadical195"
