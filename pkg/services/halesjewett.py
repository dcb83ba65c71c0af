# -*- coding: utf-8 -*-
"""
services/halesjewett.py
Palavras, palavras variáveis, linhas combinatórias, espaços PHJ, o número
HJ(r, t) por enumeração exaustiva (só escala de mesa) e a imersão σ que leva
linhas do espaço PHJ em configurações r0 + s + f_i(y_γ) do anel.

O número PHJ N(q, k, d) nunca é calculado: N é sempre escolhido pelo usuário.
"""
from __future__ import annotations

import itertools
import logging
import threading
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from services.coloring import Coloring
from services.errors import BudgetExceeded, InvalidParams
from services.patterns import PolyFamily, eval_poly, format_poly
from services.ring_core import RingElement, format_element
from services.run_config import env_budget
from services.workers import run_chunks

logger = logging.getLogger(__name__)

VAR = "v"

Letter = Union[int, str]
MultiIndex = Tuple[int, ...]


# ============================================================
# PALAVRAS
# ============================================================

@dataclass(frozen=True)
class Word:
    t: int
    letters: Tuple[int, ...]

    def __post_init__(self):
        if self.t < 1 or not self.letters:
            raise InvalidParams("palavra exige t >= 1 e comprimento >= 1")
        if any(not 1 <= a <= self.t for a in self.letters):
            raise InvalidParams(f"letra fora de 1..{self.t}")

    def __str__(self) -> str:
        return word_label(self.letters, self.t)


@dataclass(frozen=True)
class VariableWord:
    t: int
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        if VAR not in self.letters:
            raise InvalidParams("palavra variável precisa de ao menos um v")
        if any(a != VAR and not (isinstance(a, int) and 1 <= a <= self.t) for a in self.letters):
            raise InvalidParams(f"letra fora de 1..{self.t} ∪ {{v}}")

    def __str__(self) -> str:
        return word_label(self.letters, self.t)


def word_label(letters: Sequence[Letter], t: int) -> str:
    sep = "" if t < 10 else ","
    return sep.join(str(a) for a in letters)


def substitute(w: VariableWord, a: int) -> Word:
    if not 1 <= a <= w.t:
        raise InvalidParams(f"letra {a} fora de 1..{w.t}")
    return Word(w.t, tuple(a if ch == VAR else ch for ch in w.letters))


def variable_words(t: int, N: int) -> Iterator[VariableWord]:
    """Todas as (t+1)^N − t^N palavras variáveis, em ordem lexicográfica com v por último."""
    alphabet: List[Letter] = list(range(1, t + 1)) + [VAR]
    for letters in itertools.product(alphabet, repeat=N):
        if VAR in letters:
            yield VariableWord(t, letters)


def word_index(letters: Sequence[int], t: int) -> int:
    k = 0
    for a in letters:
        k = k * t + (a - 1)
    return k


def combinatorial_lines(t: int, N: int) -> List[Tuple[int, ...]]:
    """Cada linha como tupla de índices de células (ordem lexicográfica de [t]^N)."""
    return [
        tuple(word_index(substitute(w, a).letters, t) for a in range(1, t + 1))
        for w in variable_words(t, N)
    ]


# ============================================================
# NÚMERO HJ EXAUSTIVO
# ============================================================

@dataclass(frozen=True)
class HJResult:
    r: int
    t: int
    N: int
    found: bool
    avoiding_coloring: Optional[Dict[str, int]] = None

    def as_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "r": self.r,
            "t": self.t,
            "N": self.N,
            "status": "found" if self.found else "not_found",
        }
        if self.avoiding_coloring is not None:
            out["avoiding_coloring"] = self.avoiding_coloring
        return out


class _AvoidSearch:
    """DFS célula a célula; linhas são testadas quando a última célula recebe cor."""

    def __init__(self, r: int, cells: int, lines: List[Tuple[int, ...]]):
        self.r = r
        self.cells = cells
        self.closing: List[List[Tuple[int, ...]]] = [[] for _ in range(cells)]
        for line in lines:
            self.closing[max(line)].append(line)
        self.nodes = 0

    def _closes_mono(self, colors: List[int], k: int) -> bool:
        for line in self.closing[k]:
            first = colors[line[0]]
            if all(colors[c] == first for c in line):
                return True
        return False

    def prefix_ok(self, prefix: Sequence[int]) -> bool:
        colors = list(prefix)
        return not any(self._closes_mono(colors, k) for k in range(len(prefix)))

    def run(self, prefix: Sequence[int]) -> Optional[List[int]]:
        colors = list(prefix) + [0] * (self.cells - len(prefix))
        if not self.prefix_ok(prefix):
            return None

        def dfs(k: int) -> bool:
            if k == self.cells:
                return True
            for c in range(1, self.r + 1):
                self.nodes += 1
                colors[k] = c
                if not self._closes_mono(colors, k) and dfs(k + 1):
                    return True
            colors[k] = 0
            return False

        return colors if dfs(len(prefix)) else None


def _avoiding_coloring(r: int, t: int, N: int, jobs: int) -> Optional[List[int]]:
    cells = t ** N
    if jobs <= 1:
        return _AvoidSearch(r, cells, combinatorial_lines(t, N)).run(())

    depth = 0
    while depth < cells and r ** depth < jobs * 4:
        depth += 1
    prefixes = list(itertools.product(range(1, r + 1), repeat=depth))
    best = [len(prefixes)]
    lock = threading.Lock()

    def branch(k: int) -> Optional[List[int]]:
        if best[0] < k:
            return None
        local = _AvoidSearch(r, cells, combinatorial_lines(t, N))
        found = local.run(prefixes[k])
        if found is not None:
            with lock:
                best[0] = min(best[0], k)
        return found

    for result in run_chunks(branch, list(range(len(prefixes))), jobs=jobs):
        if result is not None:
            return result
    return None


def _label_coloring(colors: Sequence[int], t: int, N: int) -> Dict[str, int]:
    words = itertools.product(range(1, t + 1), repeat=N)
    return {word_label(wd, t): color for wd, color in zip(words, colors)}


def hj_number_exhaustive(r: int, t: int, maxN: int, budget: Optional[int] = None, jobs: int = 1) -> HJResult:
    """
    Menor N <= maxN tal que toda r-coloração de [t]^N tem linha monocromática;
    junto vai a coloração que evita linhas em N−1 (quando N > 1).
    Caso contrário, NotFoundWithin(maxN) com uma coloração que evita linhas em maxN.
    """
    if r < 1 or t < 1 or maxN < 1:
        raise InvalidParams("r, t e maxN devem ser >= 1")
    budget = env_budget() if budget is None else budget
    avoiding: Optional[List[int]] = None
    for N in range(1, maxN + 1):
        cells = t ** N
        work = cells * r ** cells
        if work > budget:
            raise BudgetExceeded(f"HJ({r},{t}) em N={N}: trabalho estimado {work} > teto {budget}")
        previous, avoiding = avoiding, _avoiding_coloring(r, t, N, jobs)
        if avoiding is None:
            logger.info(f"[hj] HJ({r},{t}) = {N}")
            witness = _label_coloring(previous, t, N - 1) if previous is not None else None
            return HJResult(r, t, N, True, witness)
        logger.debug(f"[hj] N={N}: existe coloração sem linha monocromática")
    return HJResult(r, t, maxN, False, _label_coloring(avoiding, t, maxN))


# ============================================================
# ESPAÇO PHJ
# ============================================================

@dataclass(frozen=True)
class WildcardSet:
    members: frozenset

    def __post_init__(self):
        if not self.members:
            raise InvalidParams("γ deve ser não vazio")
        if any(not isinstance(i, int) or i < 1 for i in self.members):
            raise InvalidParams("γ ⊆ {1..N}")

    @classmethod
    def of(cls, *members: int) -> "WildcardSet":
        return cls(frozenset(members))

    def check(self, N: int) -> None:
        if max(self.members) > N:
            raise InvalidParams(f"γ ⊄ {{1..{N}}}")

    def power(self, j: int) -> Iterator[MultiIndex]:
        return itertools.product(sorted(self.members), repeat=j)


@dataclass(frozen=True)
class PhjPoint:
    """
    Ponto de [q]^N × [q]^{N²} × ... × [q]^{N^d}. arrays[j-1] tem forma (N,)*j e
    letras em 1..q. Com `alphabet`, a letra k representa alphabet[k-1].
    """

    d: int
    N: int
    q: int
    arrays: Tuple[np.ndarray, ...] = field(compare=False, repr=False)
    alphabet: Optional[Tuple[RingElement, ...]] = None

    def __post_init__(self):
        if self.d < 1 or self.N < 1 or self.q < 1:
            raise InvalidParams("d, N e q devem ser >= 1")
        if len(self.arrays) != self.d:
            raise InvalidParams(f"esperados {self.d} blocos, recebidos {len(self.arrays)}")
        frozen = []
        for j, arr in enumerate(self.arrays, start=1):
            arr = np.array(arr, dtype=np.int64)
            if arr.shape != (self.N,) * j:
                raise InvalidParams(f"bloco {j} com forma {arr.shape}, esperado {(self.N,) * j}")
            if arr.size and (arr.min() < 1 or arr.max() > self.q):
                raise InvalidParams(f"letra fora de 1..{self.q} no bloco {j}")
            arr.setflags(write=False)
            frozen.append(arr)
        object.__setattr__(self, "arrays", tuple(frozen))
        if self.alphabet is not None and len(self.alphabet) != self.q:
            raise InvalidParams("alfabeto com tamanho diferente de q")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhjPoint):
            return NotImplemented
        return (
            (self.d, self.N, self.q, self.alphabet) == (other.d, other.N, other.q, other.alphabet)
            and all(np.array_equal(a, b) for a, b in zip(self.arrays, other.arrays))
        )

    def __hash__(self) -> int:
        return hash((self.d, self.N, self.q, tuple(a.tobytes() for a in self.arrays)))

    def letter(self, j: int, idx: MultiIndex) -> int:
        return int(self.arrays[j - 1][tuple(i - 1 for i in idx)])

    def value(self, j: int, idx: MultiIndex) -> RingElement:
        if self.alphabet is None:
            raise InvalidParams("ponto sem alfabeto de coeficientes")
        return self.alphabet[self.letter(j, idx) - 1]

    def key(self) -> Tuple[int, ...]:
        return tuple(int(v) for a in self.arrays for v in a.ravel())

    @classmethod
    def constant(cls, d: int, N: int, q: int, letter: int = 1, alphabet=None) -> "PhjPoint":
        return cls(d, N, q, tuple(np.full((N,) * j, letter) for j in range(1, d + 1)), alphabet)

    @classmethod
    def from_values(cls, alphabet: Sequence[RingElement], blocks: Sequence) -> "PhjPoint":
        """Constrói a partir dos valores do anel; cada valor precisa estar no alfabeto."""
        alphabet = tuple(alphabet)
        lookup = {v: k + 1 for k, v in enumerate(alphabet)}

        def letter(v: RingElement) -> int:
            if v not in lookup:
                raise InvalidParams(f"{format_element(v)} fora do alfabeto de coeficientes")
            return lookup[v]

        arrays = []
        for block in blocks:
            arr = np.array(block, dtype=object)
            arrays.append(np.vectorize(letter, otypes=[np.int64])(arr))
        N = arrays[0].shape[0]
        return cls(len(arrays), N, len(alphabet), tuple(arrays), alphabet)


def all_phj_points(d: int, N: int, q: int, alphabet=None) -> Iterator[PhjPoint]:
    sizes = [N ** j for j in range(1, d + 1)]
    for flat in itertools.product(range(1, q + 1), repeat=sum(sizes)):
        arrays, start = [], 0
        for j, size in enumerate(sizes, start=1):
            arrays.append(np.array(flat[start:start + size]).reshape((N,) * j))
            start += size
        yield PhjPoint(d, N, q, tuple(arrays), alphabet)


def phj_translate(a: PhjPoint, gamma: WildcardSet, xs: Sequence[int]) -> PhjPoint:
    """a ⊕ x_1γ ⊕ x_2(γ×γ) ⊕ ... ⊕ x_dγ^d: coordenadas em γ^j recebem x_j."""
    gamma.check(a.N)
    if len(xs) != a.d:
        raise InvalidParams(f"esperadas {a.d} letras, recebidas {len(xs)}")
    if any(not 1 <= x <= a.q for x in xs):
        raise InvalidParams(f"letra fora de 1..{a.q}")
    zero_based = [i - 1 for i in sorted(gamma.members)]
    arrays = []
    for j, (arr, x) in enumerate(zip(a.arrays, xs), start=1):
        out = arr.copy()
        out[np.ix_(*([zero_based] * j))] = x
        arrays.append(out)
    return PhjPoint(a.d, a.N, a.q, tuple(arrays), a.alphabet)


# ============================================================
# IMERSÃO σ
# ============================================================

def coefficient_alphabet(F: PolyFamily) -> Tuple[RingElement, ...]:
    """A = {a_j^i}, com a_j^i = 0 para j > grau(f_i), em ordem canônica."""
    d = max(1, F.degree)
    values = set()
    for f in F:
        coeffs = f.coeffs
        for j in range(1, d + 1):
            values.add(coeffs.get(j, F.spec.zero))
    return tuple(sorted(values))


def multiplicative_assignment(ys: Sequence[RingElement], d: int) -> Dict[MultiIndex, RingElement]:
    """y_ī = y_{i1}·...·y_{ij} para todo ī ∈ [N]^j, j <= d (ys é y_1..y_N)."""
    N = len(ys)
    out: Dict[MultiIndex, RingElement] = {}
    for j in range(1, d + 1):
        for idx in itertools.product(range(1, N + 1), repeat=j):
            value = ys[idx[0] - 1]
            for i in idx[1:]:
                value = value * ys[i - 1]
            out[idx] = value
    return out


def _y(y_assign: Dict[MultiIndex, RingElement], idx: MultiIndex) -> RingElement:
    try:
        return y_assign[idx]
    except KeyError:
        raise InvalidParams(f"y_assign sem entrada para o índice {idx}") from None


def sigma_embed(
    F: PolyFamily,
    N: int,
    y_assign: Dict[MultiIndex, RingElement],
    r0: RingElement,
    u: PhjPoint,
) -> RingElement:
    """σ(u) = r0 + Σ_j Σ_{ī ∈ [N]^j} u_{j,ī} · y_ī."""
    if u.alphabet is None:
        raise InvalidParams("u precisa do alfabeto de coeficientes de F")
    if u.N != N or u.d != max(1, F.degree):
        raise InvalidParams(f"u com (d, N) = ({u.d}, {u.N}); esperado ({max(1, F.degree)}, {N})")
    total = r0
    for j in range(1, u.d + 1):
        for idx in itertools.product(range(1, N + 1), repeat=j):
            coef = u.value(j, idx)
            if not coef.is_zero():
                total = total + coef * _y(y_assign, idx)
    return total


def check_multiplicative(y_assign: Dict[MultiIndex, RingElement], N: int, d: int) -> Optional[MultiIndex]:
    """Primeiro índice ī com y_ī ≠ Π y_{i_k}, ou None."""
    for j in range(1, d + 1):
        for idx in itertools.product(range(1, N + 1), repeat=j):
            value = _y(y_assign, idx)
            if j == 1:
                continue
            expected = _y(y_assign, (idx[0],))
            for i in idx[1:]:
                expected = expected * _y(y_assign, (i,))
            if value != expected:
                return idx
    return None


@dataclass(frozen=True)
class SigmaLineRow:
    poly: str
    lhs: RingElement
    rhs: RingElement

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> Dict[str, object]:
        return {
            "f": self.poly,
            "sigma": format_element(self.lhs),
            "r0_plus_s_plus_f": format_element(self.rhs),
            "equal": self.equal,
        }


@dataclass(frozen=True)
class SigmaLineReport:
    s: RingElement
    y_gamma: RingElement
    rows: Tuple[SigmaLineRow, ...]

    @property
    def holds(self) -> bool:
        return all(row.equal for row in self.rows)

    def as_dict(self) -> Dict[str, object]:
        return {
            "s": format_element(self.s),
            "y_gamma": format_element(self.y_gamma),
            "holds": self.holds,
            "rows": [row.as_dict() for row in self.rows],
        }


def verify_sigma_line_identity(
    F: PolyFamily,
    N: int,
    y_assign: Dict[MultiIndex, RingElement],
    gamma: WildcardSet,
    u: PhjPoint,
    r0: RingElement,
) -> SigmaLineReport:
    """
    Para cada f_i ∈ F compara σ(u ⊕ a_1^i γ ⊕ ... ⊕ a_d^i γ^d) com
    r0 + s + f_i(y_γ), s = Σ_j Σ_{ī ∉ γ^j} u_{j,ī} y_ī e y_γ = Σ_{i∈γ} y_i.
    Só vale com y_assign multiplicativo, o que é conferido antes.
    """
    d = max(1, F.degree)
    gamma.check(N)
    bad = check_multiplicative(y_assign, N, d)
    if bad is not None:
        raise InvalidParams(f"y_assign não é multiplicativo no índice {bad}")

    alphabet = coefficient_alphabet(F)
    if u.alphabet is None or set(u.alphabet) != set(alphabet):
        raise InvalidParams("o alfabeto de u deve ser o conjunto de coeficientes de F")
    letter_of = {v: k + 1 for k, v in enumerate(u.alphabet)}

    s = u.alphabet[0].spec.zero
    for j in range(1, d + 1):
        inside = set(gamma.power(j))
        for idx in itertools.product(range(1, N + 1), repeat=j):
            if idx not in inside:
                s = s + u.value(j, idx) * _y(y_assign, idx)
    y_gamma = s.spec.zero
    for i in sorted(gamma.members):
        y_gamma = y_gamma + _y(y_assign, (i,))

    rows = []
    for f in F:
        coeffs = f.coeffs
        xs = [letter_of[coeffs.get(j, F.spec.zero)] for j in range(1, d + 1)]
        lhs = sigma_embed(F, N, y_assign, r0, phj_translate(u, gamma, xs))
        rhs = r0 + s + eval_poly(f, y_gamma)
        rows.append(SigmaLineRow(format_poly(f), lhs, rhs))
    report = SigmaLineReport(s, y_gamma, tuple(rows))
    if not report.holds:
        logger.error(f"[sigma] identidade falhou: {report.as_dict()}")
    return report


# ============================================================
# BUSCA DE CONFIGURAÇÕES PHJ MONOCROMÁTICAS (escala mínima)
# ============================================================

@dataclass(frozen=True)
class PhjHit:
    point: PhjPoint
    gamma: WildcardSet
    color: int


def phj_monochromatic_search(
    color_of: Callable[[PhjPoint], Optional[int]],
    q: int,
    N: int,
    d: int,
    alphabet=None,
    budget: Optional[int] = None,
) -> Optional[PhjHit]:
    """
    Varre a ∈ Q e γ ⊆ [N] não vazio atrás de {a ⊕ x_1γ ⊕ ... ⊕ x_dγ^d : x_j ∈ [q]}
    monocromático. color_of devolve None para pontos sem cor (eles quebram a
    configuração).
    """
    budget = env_budget() if budget is None else budget
    points = q ** sum(N ** j for j in range(1, d + 1))
    work = points * (2 ** N - 1) * q ** d
    if work > budget:
        raise BudgetExceeded(f"busca PHJ: trabalho estimado {work} > teto {budget}")

    gammas = [
        WildcardSet(frozenset(c))
        for size in range(1, N + 1)
        for c in itertools.combinations(range(1, N + 1), size)
    ]
    letters = list(itertools.product(range(1, q + 1), repeat=d))
    cache: Dict[Tuple[int, ...], Optional[int]] = {}

    def colored(p: PhjPoint) -> Optional[int]:
        key = p.key()
        if key not in cache:
            cache[key] = color_of(p)
        return cache[key]

    for a in all_phj_points(d, N, q, alphabet):
        for gamma in gammas:
            first = None
            for xs in letters:
                color = colored(phj_translate(a, gamma, xs))
                if color is None or (first is not None and color != first):
                    break
                first = color
            else:
                return PhjHit(a, gamma, first)
    return None


@dataclass(frozen=True)
class PullbackHit:
    hit: PhjHit
    a: RingElement
    n: RingElement
    elements: Tuple[RingElement, ...]
    color: int

    def as_dict(self) -> Dict[str, object]:
        return {
            "gamma": sorted(self.hit.gamma.members),
            "a": format_element(self.a),
            "n": format_element(self.n),
            "elements": [format_element(e) for e in self.elements],
            "color": self.color,
        }


def sigma_pullback_search(
    c: Coloring,
    F: PolyFamily,
    N: int,
    y_assign: Dict[MultiIndex, RingElement],
    r0: RingElement,
    budget: Optional[int] = None,
) -> Optional[PullbackHit]:
    """
    Colore Q por φ∘σ (φ = coloração da janela; σ(u) fora da janela fica sem cor)
    e procura configuração PHJ monocromática. Um acerto dá a = r0 + s e n = y_γ
    com {a + f_i(n) : f_i ∈ F} monocromático, conferido diretamente.
    """
    alphabet = coefficient_alphabet(F)
    d = max(1, F.degree)

    def color_of(u: PhjPoint) -> Optional[int]:
        return c.color_of(sigma_embed(F, N, y_assign, r0, u))

    hit = phj_monochromatic_search(color_of, len(alphabet), N, d, alphabet, budget)
    if hit is None:
        return None
    report = verify_sigma_line_identity(F, N, y_assign, hit.gamma, hit.point, r0)
    a = r0 + report.s
    elements = tuple(a + eval_poly(f, report.y_gamma) for f in F)
    colors = {c.color_of(e) for e in elements}
    if colors != {hit.color}:
        raise InvalidParams("configuração puxada por σ não é monocromática")
    return PullbackHit(hit, a, report.y_gamma, elements, hit.color)
